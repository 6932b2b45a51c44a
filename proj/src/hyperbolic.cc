#include "syscodes/hyperbolic.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "syscodes/error.h"
#include "syscodes/parallel.h"

namespace syscodes {

namespace {

bool is_prime(int64_t p) {
    if (p < 2) {
        return false;
    }
    for (int64_t f = 2; f * f <= p; f++) {
        if (p % f == 0) {
            return false;
        }
    }
    return true;
}

int64_t isqrt(int64_t v) {
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) {
        r--;
    }
    while ((r + 1) * (r + 1) <= v) {
        r++;
    }
    return r;
}

void require_upper_half_plane(std::complex<double> z) {
    if (!(z.imag() > 0)) {
        throw Error(ErrorKind::InvalidArgument, "point is not in the upper half plane");
    }
}

BigRational pow_int(const BigRational &x, int k) {
    BigRational out = 1;
    for (int i = 0; i < k; i++) {
        out *= x;
    }
    return out;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    auto fail = [&]() {
        return Error(ErrorKind::Parse, "expected a decimal or fraction, got '" + std::string(text) + "'");
    };
    if (text.empty()) {
        throw fail();
    }
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw fail();
        }
        return boost::multiprecision::cpp_int(std::string(digits));
    };
    bool negative = text.front() == '-';
    if (negative || text.front() == '+') {
        text.remove_prefix(1);
    }
    BigRational value;
    if (size_t slash = text.find('/'); slash != std::string_view::npos) {
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw fail();
        }
        value = BigRational(parse_int(text.substr(0, slash)), den);
    } else if (size_t dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        boost::multiprecision::cpp_int scale = 1;
        for (size_t i = 0; i < frac.size(); i++) {
            scale *= 10;
        }
        auto w = whole.empty() ? boost::multiprecision::cpp_int(0) : parse_int(whole);
        auto f = frac.empty() ? boost::multiprecision::cpp_int(0) : parse_int(frac);
        if (whole.empty() && frac.empty()) {
            throw fail();
        }
        value = BigRational(w * scale + f, scale);
    } else {
        value = BigRational(parse_int(text));
    }
    return negative ? -value : value;
}

double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
    require_upper_half_plane(z);
    require_upper_half_plane(w);
    return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.imag() * w.imag())));
}

double cosh_hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
    require_upper_half_plane(z);
    require_upper_half_plane(w);
    return 1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag());
}

BigRational cosh_hyperbolic_distance(const RationalPoint &z, const RationalPoint &w) {
    if (z.im <= 0 || w.im <= 0) {
        throw Error(ErrorKind::InvalidArgument, "point is not in the upper half plane");
    }
    BigRational dx = z.re - w.re;
    BigRational dy = z.im - w.im;
    return 1 + (dx * dx + dy * dy) / (2 * z.im * w.im);
}

double translation_length(double trace) {
    if (!(trace > 2.0)) {
        throw Error(ErrorKind::NotHyperbolic, "trace " + std::to_string(trace) + " is not greater than 2");
    }
    return 2.0 * std::acosh(trace / 2.0);
}

bool CongruenceElement::is_identity_lift(int64_t N) const {
    return b == 0 && c == 0 && d == 0 && (1 + N * a == 1 || 1 + N * a == -1);
}

int64_t congruence_norm(int64_t p, int64_t N, int64_t a, int64_t b, int64_t c, int64_t d) {
    int64_t diag = 1 + N * a;
    return diag * diag - p * N * N * b * b + N * N * c * c - p * N * N * d * d;
}

std::vector<CongruenceElement> enumerate_congruence_elements(int64_t p, int64_t N, int64_t B) {
    if (!is_prime(p) || p % 4 != 3) {
        throw Error(ErrorKind::InvalidArgument, "p must be a prime congruent to 3 mod 4");
    }
    if (N < 2) {
        throw Error(ErrorKind::InvalidArgument, "level N must be at least 2");
    }
    if (B < 1) {
        throw Error(ErrorKind::InvalidArgument, "coefficient bound B must be at least 1");
    }
    if (p * N * N * B * B > (int64_t{1} << 40) || B > 4096) {
        throw Error(ErrorKind::TooLarge, "search box too large for exact 64-bit arithmetic");
    }
    // Solve for d: p N^2 d^2 = (1 + Na)^2 - 1 - p N^2 b^2 + N^2 c^2.
    size_t span = static_cast<size_t>(2 * B + 1);
    std::vector<std::vector<CongruenceElement>> by_a(span);
    int64_t pn2 = p * N * N;
    parallel_for(span, [&](size_t slot) {
        int64_t a = static_cast<int64_t>(slot) - B;
        int64_t diag = 1 + N * a;
        auto &out = by_a[slot];
        for (int64_t b = -B; b <= B; b++) {
            for (int64_t c = -B; c <= B; c++) {
                int64_t rhs = diag * diag - 1 - pn2 * b * b + N * N * c * c;
                if (rhs < 0 || rhs % pn2 != 0) {
                    continue;
                }
                int64_t d = isqrt(rhs / pn2);
                if (d * d != rhs / pn2 || d > B) {
                    continue;
                }
                auto emit = [&](int64_t dd) {
                    out.push_back({a, b, c, dd, std::abs(2 + 2 * a * N), congruence_norm(p, N, a, b, c, dd)});
                };
                if (d > 0) {
                    emit(-d);
                }
                emit(d);
            }
        }
    });
    std::vector<CongruenceElement> all;
    for (auto &bucket : by_a) {
        all.insert(all.end(), bucket.begin(), bucket.end());
    }
    std::sort(all.begin(), all.end(), [](const CongruenceElement &x, const CongruenceElement &y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    });
    return all;
}

TraceBoundReport min_trace_verify(int64_t p, int64_t N, int64_t B) {
    TraceBoundReport r;
    r.p = p;
    r.N = N;
    r.B = B;
    r.bound = N * N - 2;
    std::vector<CongruenceElement> elements = enumerate_congruence_elements(p, N, B);
    r.element_count = elements.size();
    for (const auto &e : elements) {
        if (e.is_identity_lift(N)) {
            continue;
        }
        r.nontrivial_count++;
        if (!r.min_nontrivial_trace || e.trace < *r.min_nontrivial_trace) {
            r.min_nontrivial_trace = e.trace;
            r.minimizer = e;
        }
    }
    r.vacuous = r.nontrivial_count == 0;
    r.satisfied = r.vacuous || *r.min_nontrivial_trace >= r.bound;
    return r;
}

std::string trace_report_csv_header() {
    return "p,N,B,count,min_trace,bound,satisfied";
}

std::string trace_report_csv_row(const TraceBoundReport &r) {
    return std::to_string(r.p) + ',' + std::to_string(r.N) + ',' + std::to_string(r.B) + ',' +
           std::to_string(r.nontrivial_count) + ',' +
           (r.min_nontrivial_trace ? std::to_string(*r.min_nontrivial_trace) : std::string()) + ',' +
           std::to_string(r.bound) + ',' + (r.satisfied ? "true" : "false");
}

BigRational pi_lower_bound() {
    return BigRational(boost::multiprecision::cpp_int("314159265358979"),
                       boost::multiprecision::cpp_int("100000000000000"));
}

BigRational pi_upper_bound() {
    return BigRational(boost::multiprecision::cpp_int("314159265358980"),
                       boost::multiprecision::cpp_int("100000000000000"));
}

BigRational transition_coefficient(const BigRational &eta, const BigRational &r) {
    BigRational slope = (9 * eta * eta - 4) / (36 * pow_int(eta, 3));
    BigRational offset = (2 - 3 * eta * eta) / (216 * pow_int(eta, 4));
    return slope * r + offset;
}

MetricBoundReport metric_area_bounds(const BigRational &eta) {
    if (eta < BigRational(1, 2)) {
        throw Error(ErrorKind::InvalidArgument, "eta must be at least 1/2");
    }
    const double pi = std::acos(-1.0);
    const double eta_d = static_cast<double>(eta);
    BigRational pi_hi = pi_upper_bound();

    MetricBoundReport r;
    r.eta = eta;

    BigRational sigma1_denominator = 12 * 18 * 18 * pow_int(eta, 3);
    r.area_sigma1 = 2 * pi / (12.0 * 18.0 * 18.0 * eta_d * eta_d * eta_d);
    r.sigma1_below_1_77 = 2 * pi_hi / sigma1_denominator < BigRational(1, 77);

    r.area_sigma2 = pi / (486.0 * eta_d);
    r.sigma2_below_1_150 = pi_hi / (486 * eta) < BigRational(1, 150);
    r.area_sigma2_constant = pi / 486.0;
    r.sigma2_constant_below_1_150 = pi_hi / 486 < BigRational(1, 150);

    BigRational corners = 3 * (BigRational(1, 150) + BigRational(1, 77));
    r.total_triangle_area = std::sqrt(3.0) / 4.0 + static_cast<double>(corners);
    // sqrt(3)/4 < 1/2 - corners  <=>  0 < q and 3 < q^2 with q = 4 (1/2 - corners).
    BigRational q = 4 * (BigRational(1, 2) - corners);
    r.total_below_half = q > 0 && BigRational(3) < q * q;

    // The coefficient is affine in r, so its maximum sits at an end of the annulus.
    BigRational inner = 1 / (18 * eta);
    BigRational outer = 1 / (12 * eta);
    r.coefficient_max = std::max(transition_coefficient(eta, inner), transition_coefficient(eta, outer));
    r.coefficient_within_4_81 = r.coefficient_max <= BigRational(4, 81);
    return r;
}

}  // namespace syscodes
