#include "fuzzytorus/qroots.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

namespace {

constexpr double kPi = std::numbers::pi;

cplx phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

cplx RootOfUnity::q() const { return phase(2.0 * half_angle_); }
cplx RootOfUnity::q_half() const { return phase(half_angle_); }
cplx RootOfUnity::q_quarter() const { return phase(quarter_angle_); }
cplx RootOfUnity::q_eighth() const { return phase(0.5 * quarter_angle_); }

Branch RootOfUnity::half_branch() const {
  const cplx reference = phase(kPi * numerator_ / order_);
  return std::real(q_half() * std::conj(reference)) > 0.0 ? Branch::Plus : Branch::Minus;
}

Branch RootOfUnity::quarter_branch() const {
  return std::real(q_quarter() * std::conj(phase(0.5 * half_angle_))) > 0.0 ? Branch::Plus
                                                                              : Branch::Minus;
}

RootOfUnity RootOfUnity::power(long p) const {
  const long g = std::gcd(static_cast<long>(order_), p);
  const long order = order_ / g;
  long numerator = (static_cast<long>(numerator_) * (p / g)) % order;
  if (numerator < 0) numerator += order;
  return RootOfUnity(static_cast<int>(order), static_cast<int>(numerator),
                     static_cast<double>(p) * half_angle_, static_cast<double>(p) * quarter_angle_);
}

RootOfUnity make_root(int n, int k, Branch half, Branch quarter) {
  if (n < 1) {
    throw Error(ErrorKind::NonPositiveOrder, "root order must be positive, got " + std::to_string(n));
  }
  if (std::gcd(n, k) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "K = " + std::to_string(k) + " is not coprime to N = " + std::to_string(n));
  }
  int reduced = k % n;
  if (reduced < 0) reduced += n;
  const double half_angle = kPi * reduced / n + (half == Branch::Minus ? kPi : 0.0);
  const double quarter_angle = 0.5 * half_angle + (quarter == Branch::Minus ? kPi : 0.0);
  return RootOfUnity(n, reduced, half_angle, quarter_angle);
}

RootOfUnity default_root(int n, int k) {
  if (n < 1) {
    throw Error(ErrorKind::NonPositiveOrder, "root order must be positive, got " + std::to_string(n));
  }
  int reduced = k % n;
  if (reduced < 0) reduced += n;
  // For odd n: q^{n/2} = (-1)^K * branch, so the branch equals (-1)^K.
  const Branch half = (n % 2 == 1 && reduced % 2 == 1) ? Branch::Minus : Branch::Plus;
  return make_root(n, reduced, half, Branch::Plus);
}

RootOfUnity classical_root(int n) {
  if (n % 2 == 1) return make_root(n, 2 % n == 0 ? 1 : 2, Branch::Plus, Branch::Plus);
  return make_root(n, 1, Branch::Plus, Branch::Plus);
}

double qint(const RootOfUnity& root, long num, int den) {
  double angle = 0.0;
  switch (den) {
    case 1: angle = root.half_angle(); break;
    case 2: angle = root.quarter_angle(); break;
    case 4: angle = 0.5 * root.quarter_angle(); break;
    default:
      throw Error(ErrorKind::InvalidArgument,
                  "quantum number denominator must be 1, 2 or 4, got " + std::to_string(den));
  }
  const cplx denom = root.q_half() - std::conj(root.q_half());
  if (root.is_degenerate() || std::abs(denom) < 1e-12) {
    throw Error(ErrorKind::DegenerateRoot, "quantum number undefined for q = 1");
  }
  const cplx z = std::polar(1.0, static_cast<double>(num) * angle);
  const cplx value = (z - std::conj(z)) / denom;
  if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value.real()))) {
    throw Error(ErrorKind::NonRealResult, "quantum number has imaginary residue " +
                                              std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace fuzzytorus
