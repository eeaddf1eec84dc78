#include "cochar/rational.hpp"

#include <sstream>

namespace cochar {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(t));
    BigInt num(t.substr(0, slash));
    BigInt den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("malformed rational '") + s + "': " + e.what());
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

RatVec parse_rat_csv(const std::string& s) {
  RatVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

IntVec parse_int_csv(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rat r = parse_rat(item);
    if (denominator(r) != 1) throw std::invalid_argument("expected integer entry: " + item);
    out.push_back(static_cast<Int>(numerator(r)));
  }
  return out;
}

}  // namespace cochar
