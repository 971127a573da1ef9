#ifndef COPSHIELD_BOUNDS_HPP
#define COPSHIELD_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace copshield {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with small terms, for strategy parameters like 1/2.
struct Rational {
    long long num = 1;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(const std::string& text);  // "1", "0.5", "1/2"

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

// log2 of the protection overhead f(k,d) = 2^((log k)^2 + 2^8 log(kd)(log log k + d)).
// The overhead itself is far too large to materialize, so all consumers
// compare in log space.
double log2_f(int k, int d);

struct TAlpha {
    int t;             // ceil(log2(2dk))
    double alpha;      // 32 t log2(2 t x)
    double log2_alpha;
};
TAlpha t_alpha(int k, int d, long long x);

int ceil_log2(long long m);  // smallest t with 2^t >= m

struct Theorem2K {
    long long k;
    bool clamped;     // radicand was negative; k clamped to 2
    double radicand;  // log x - 2^9 (sqrt(log x) + log d)(log log x + d)
};
Theorem2K theorem2_k(long long x, int d);

// The same radicand evaluated from log2(x) directly, so the sign can be
// inspected for inputs far beyond integer range.
double theorem2_radicand_from_logx(double log2x, int d);

struct EpsilonC {
    BigInt c;     // (3/eps)^(2/eps) + 1, rounded up when the exponent is fractional
    bool ceiled;  // a ceiling was taken
};
EpsilonC epsilon_c(const Rational& eps);

/// Flat record of every closed-form quantity, serialized as key-value lines.
struct BoundReport {
    int k = 0;
    int d = 0;
    long long x = 0;
    long long vc = 0;
    Rational eps;
    double log2_f_value = 0.0;
    int t = 0;
    double log2_alpha = 0.0;
    double theorem1_exponent = 0.0;   // sqrt(log2 vc)
    double theorem2_log2_bound = 0.0; // log2(x / k_chosen)
    long long theorem2_k_value = 2;
    bool theorem2_clamped = true;
    BigInt epsilon_c_value = 0;

    std::string to_text() const;
};

BoundReport make_bound_report(int k, int d, long long x, long long vc, const Rational& eps);

}  // namespace copshield

#endif
