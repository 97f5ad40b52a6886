#include "idkit/rational.hpp"

#include <cctype>

namespace idkit {

namespace {

bool valid_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

// The gmp integer parser rejects a leading '+'.
std::string strip_plus(const std::string& t) {
  return t[0] == '+' ? t.substr(1) : t;
}

}  // namespace

Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_integer_token(s)) throw ParseError("not a rational: '" + s + "'");
      return Rat(Int(strip_plus(s)));
    }
    const std::string ns0 = s.substr(0, slash);
    const std::string ds = s.substr(slash + 1);
    if (!valid_integer_token(ns0) || !valid_integer_token(ds))
      throw ParseError("not a rational: '" + s + "'");
    const std::string ns = strip_plus(ns0);
    Int den(strip_plus(ds));
    if (den == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    // Division canonicalizes; the raw mpq string constructor does not.
    return Rat(Int(ns)) / Rat(den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

std::string rat_format(const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace idkit
