#pragma once

#include "valtree/balls.hpp"
#include "valtree/ordgroup.hpp"
#include "valtree/puiseux.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace valtree {

struct EvalConfig {
  int max_depth = 64;
  Rational order = 16;
};

/// ω_{a,δ} (δ may be Inf) or the limit valuation ω_𝓑 of a nest.
class ParamVal {
 public:
  enum class Kind { Monomial, Limit };

  static ParamVal mono(PuiseuxElt center, QuasiCut radius);
  static ParamVal limit(Nest nest);

  Kind kind() const { return kind_; }
  bool is_mono() const { return kind_ == Kind::Monomial; }
  const PointedBall& ball() const;
  const Nest& nest() const;
  std::string to_string() const;

 private:
  ParamVal() = default;
  Kind kind_ = Kind::Monomial;
  PointedBall ball_{PuiseuxElt(), QuasiCut::neg_inf()};
  Nest nest_;
};

/// Value of one term a_n (x−a)^n: v̄(a_n) + n·x_δ. `known` is false when a_n is an
/// O(t^p), in which case `value` is the lower bound p + n·x_δ.
struct TermValue {
  int n;
  ExtValue value;
  bool known;
};
std::vector<TermValue> monomial_terms(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f);

ExtValue eval(const ParamVal& mu, const Poly& f, const EvalConfig& cfg = {});
/// The argmin set S of the monomial formula (δ ≠ Inf).
std::vector<int> argmin_set(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f);

struct LimitTrace {
  ExtValue value = ExtValue::infinity();
  int certificate = 0;          // stable from this index on
  std::vector<ExtValue> prefix;  // ω_i(f) for i ≤ certificate
};
LimitTrace limit_eval(const Nest& n, const Poly& f, const EvalConfig& cfg = {});

struct OracleResult {
  ExtValue value = ExtValue::infinity();
  PuiseuxElt witness;
  int evaluated = 0;
};
/// Brute-force min{v̄(f(c)) | c ∈ B} for a radius in Γ (or γ⁻, the same set): direct
/// evaluation at a and at a + u·t^γ for deg f + 1 distinct u (one of them is generic),
/// plus `samples` random interior points.
OracleResult min_over_ball(const PointedBall& b, const Poly& f, int samples = 8, std::uint64_t seed = 1);
/// max_i min_{B_i} f over i ≤ upto.
OracleResult min_over_nest(const Nest& n, const Poly& f, int upto, int samples = 4, std::uint64_t seed = 1);

struct WeneedReport {
  char which = '?';  // 'a', 'b', 'c'
  bool ok = false;
  ExtValue value = ExtValue::infinity();
  std::optional<ExtValue> min_v;  // cases (a), (b)
  std::vector<int> s;
  int checks = 0;
  std::string witness;  // last constructed witness in case (c)
  std::string detail;
};
/// Dispatches the three cases for ω_{a,δ}(f) against V = {v̄(f(c)) | c ∈ B(a,δ)} and verifies
/// the case's statement with brute-force computations.
WeneedReport weneed_check(const PuiseuxElt& a, const QuasiCut& delta, const Poly& f, int xi_samples = 10,
                          std::uint64_t seed = 1);

Tri val_leq(const ParamVal& mu, const ParamVal& nu, int depth);

enum class ValClass { ResidueTranscendental, ValueTranscendental, ValuationAlgebraic, NontrivialSupport };
const char* to_string(ValClass c);
ValClass classify(const ParamVal& mu);

/// x − c with ω_B(x−c) and ω_C(x−c) different, preferring ω_B(x−c) ≰ ω_C(x−c).
Poly distinguishing_witness(const PointedBall& b, const PointedBall& c);

/// Rationals strictly above a position in Γ, descending towards it.
std::vector<Rational> rationals_above(const QuasiCut& position, int count);
/// Some rational strictly inside (lo-cut, bound) given in_right(bound, cut).
Rational rational_between(const QuasiCut& cut, const Rational& bound);

}  // namespace valtree
