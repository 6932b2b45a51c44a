#ifndef SYSCODES_HYPERBOLIC_H
#define SYSCODES_HYPERBOLIC_H

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syscodes {

using BigRational = boost::multiprecision::cpp_rational;

/// Exact decimal ("0.5") or fraction ("1/2") text.
BigRational parse_rational(std::string_view text);

struct RationalPoint {
    BigRational re;
    BigRational im;
};

/// Hyperbolic distance in the upper half plane. Evaluated as
/// 2 asinh(|z - w| / (2 sqrt(Im z Im w))), which equals
/// arccosh(1 + |z - w|^2 / (2 Im z Im w)) without the cancellation near z = w.
double hyperbolic_distance(std::complex<double> z, std::complex<double> w);
/// 1 + |z - w|^2 / (2 Im z Im w).
double cosh_hyperbolic_distance(std::complex<double> z, std::complex<double> w);
BigRational cosh_hyperbolic_distance(const RationalPoint &z, const RationalPoint &w);

/// 2 arccosh(trace / 2); throws NotHyperbolic unless trace > 2.
double translation_length(double trace);

/// Element of the level-N congruence subgroup with matrix
///   [ 1 + N(a + b sqrt p)    N(-c + d sqrt p) ]
///   [ N(c + d sqrt p)        1 + N(a - b sqrt p) ].
struct CongruenceElement {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
    int64_t d = 0;
    /// |2 + 2aN|
    int64_t trace = 0;
    /// (1 + Na)^2 - p N^2 b^2 + N^2 c^2 - p N^2 d^2; always 1 for returned elements.
    int64_t norm = 0;

    /// b = c = d = 0 and 1 + Na = +-1: the identity of the projective group.
    bool is_identity_lift(int64_t N) const;
    bool operator==(const CongruenceElement &) const = default;
};

int64_t congruence_norm(int64_t p, int64_t N, int64_t a, int64_t b, int64_t c, int64_t d);

/// Every quadruple with |a|, |b|, |c|, |d| <= B and norm 1, sorted by (a, b, c, d).
/// Needs p prime with p = 3 (mod 4), N >= 2 and B >= 1.
std::vector<CongruenceElement> enumerate_congruence_elements(int64_t p, int64_t N, int64_t B);

/// Trace bound Tr >= N^2 - 2 checked over the enumerated box only; it says
/// nothing about elements outside |a|, |b|, |c|, |d| <= B.
struct TraceBoundReport {
    int64_t p = 0;
    int64_t N = 0;
    int64_t B = 0;
    size_t element_count = 0;
    size_t nontrivial_count = 0;
    std::optional<int64_t> min_nontrivial_trace;
    std::optional<CongruenceElement> minimizer;
    int64_t bound = 0;
    bool satisfied = false;
    /// No nontrivial element in the box, so `satisfied` holds vacuously.
    bool vacuous = false;
};

TraceBoundReport min_trace_verify(int64_t p, int64_t N, int64_t B);

/// "p,N,B,count,min_trace,bound,satisfied"; min_trace is empty when vacuous.
std::string trace_report_csv_header();
std::string trace_report_csv_row(const TraceBoundReport &r);

/// Rational enclosure of pi used for certified comparisons.
BigRational pi_lower_bound();
BigRational pi_upper_bound();

/// (9 eta^2 - 4) / (36 eta^3) r + (2 - 3 eta^2) / (216 eta^4): the angular
/// metric coefficient on the transition annulus 1/(18 eta) <= r <= 1/(12 eta).
BigRational transition_coefficient(const BigRational &eta, const BigRational &r);

/// Area bounds for the smoothed equilateral metric around a vertex of degree
/// 6 eta. Doubles are for display; every flag is decided in exact arithmetic
/// with the rational pi enclosure (and by squaring for sqrt 3).
struct MetricBoundReport {
    BigRational eta;
    /// 2 pi / (12 18^2 eta^3), area of the inner sector.
    double area_sigma1 = 0;
    bool sigma1_below_1_77 = false;
    /// (2/9) (pi/3) (1/(12 eta) - 1/(18 eta)) = pi / (486 eta): the volume-form
    /// bound integrated over the transition sector at this eta.
    double area_sigma2 = 0;
    bool sigma2_below_1_150 = false;
    /// pi / 486, the transition-sector constant used in the per-triangle total.
    double area_sigma2_constant = 0;
    bool sigma2_constant_below_1_150 = false;
    /// sqrt(3)/4 + 3 (1/150 + 1/77).
    double total_triangle_area = 0;
    bool total_below_half = false;
    /// Maximum of transition_coefficient over the annulus (attained at an end).
    BigRational coefficient_max;
    bool coefficient_within_4_81 = false;
};

/// Throws InvalidArgument when eta < 1/2.
MetricBoundReport metric_area_bounds(const BigRational &eta);

}  // namespace syscodes

#endif
