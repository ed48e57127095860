#include "dyb/rational.hpp"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyb/tables.hpp"

namespace dyb {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string to_string(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat phi(const Rat& lam, const Rat& a) { return lam * (lam * a + 1); }
Rat op(const Rat& lam, const Rat& a, const Rat& b) {
  Rat s = lam * a + 1;
  return a + s * s * b;
}
Rat inv(const Rat& lam, const Rat& a) {
  Rat s = lam * a + 1;
  return -a / (s * s);
}
Rat tri(const Rat& lam, const Rat& a, const Rat& b) {
  Rat s = lam * a + 1;
  return s * s * b;
}

std::string tuple_detail(const Rat& lam, const Rat& a, const Rat& b, const Rat& c,
                         const char* identity, const Rat& lhs, const Rat& rhs) {
  return std::string("identity=") + identity + " lambda=" + to_string(lam) +
         " a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c) +
         " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
}

}  // namespace

Verdict run_rational_suite(const RationalSampler& s) {
  if (s.count < 1) throw ShapeError("run_rational_suite: count must be >= 1");
  if (s.exemplar != "example_2_6" && s.exemplar != "example_4_2")
    throw ShapeError("run_rational_suite: unknown exemplar '" + s.exemplar + "'");
  std::mt19937_64 rng(s.seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto draw = [&]() { return Rat(num(rng), den(rng)); };

  for (int i = 0; i < s.count; ++i) {
    Rat lam = draw(), a = draw(), b = draw(), c = draw();
    while (lam * a + 1 == 0) {
      lam = draw();
      a = draw();
    }
    auto fail = [&](const char* identity, const Rat& lhs, const Rat& rhs) {
      return Verdict::fail(identity, {i}, {}, {},
                           tuple_detail(lam, a, b, c, identity, lhs, rhs));
    };
    if (s.exemplar == "example_2_6") {
      Rat lhs = op(lam, a, op(phi(lam, a), b, c));
      Rat rhs = op(lam, op(lam, a, b), c);
      if (lhs != rhs) return fail("associativity", lhs, rhs);
      if (op(lam, a, 0) != a) return fail("unit", op(lam, a, 0), a);
      if (op(lam, 0, a) != a) return fail("unit", op(lam, 0, a), a);
      if (phi(lam, Rat(0)) != lam) return fail("phi-unit", phi(lam, Rat(0)), lam);
      Rat ai = inv(lam, a);
      if (op(lam, a, ai) != 0) return fail("inverse", op(lam, a, ai), Rat(0));
      if (op(phi(lam, a), ai, a) != 0)
        return fail("inverse", op(phi(lam, a), ai, a), Rat(0));
      Rat pl = phi(lam, op(lam, a, b));
      Rat pr = phi(phi(lam, a), b);
      if (pl != pr) return fail("phi-asso", pl, pr);
    } else {
      Rat lhs1 = tri(lam, a, b + c);
      Rat rhs1 = tri(lam, a, b) + tri(lam, a, c);
      if (lhs1 != rhs1) return fail("post-1", lhs1, rhs1);
      Rat lhs2 = tri(lam, a + tri(lam, a, b), c);
      Rat rhs2 = tri(lam, a, tri(phi(lam, a), b, c));
      if (lhs2 != rhs2) return fail("post-2", lhs2, rhs2);
      if (tri(lam, a, Rat(0)) != 0) return fail("tri-unit", tri(lam, a, Rat(0)), Rat(0));
      if (tri(lam, Rat(0), b) != b) return fail("tri-unit", tri(lam, Rat(0), b), b);
      Rat scale = (lam * a + 1) * (lam * a + 1);
      if (scale == 0) return fail("tri-bijective", scale, Rat(1));
      // the sub-adjacent product is the closed-form dynamical group product
      Rat sub = a + tri(lam, a, b);
      Rat grp = op(lam, a, b);
      if (sub != grp) return fail("sub-adjacent", sub, grp);
    }
  }
  return Verdict::ok();
}

std::string rational_product(const std::string& lam, const std::string& a,
                             const std::string& b) {
  return to_string(op(parse_rat(lam), parse_rat(a), parse_rat(b)));
}

std::string rational_phi(const std::string& lam, const std::string& a) {
  return to_string(phi(parse_rat(lam), parse_rat(a)));
}

std::string rational_inverse(const std::string& lam, const std::string& a) {
  return to_string(inv(parse_rat(lam), parse_rat(a)));
}

std::string rational_tri(const std::string& lam, const std::string& a,
                         const std::string& b) {
  return to_string(tri(parse_rat(lam), parse_rat(a), parse_rat(b)));
}

}  // namespace dyb
