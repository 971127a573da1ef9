#include "copshield/bounds.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "copshield/errors.hpp"

namespace copshield {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(text.substr(0, slash));
        long long d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        long long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
        long long n = whole * den + (frac.empty() ? 0 : std::stoll(frac));
        return Rational(n, den);
    }
    return Rational(std::stoll(text), 1);
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

double log2_f(int k, int d) {
    if (k < 2 || d < 2) throw InvalidArgument("log2_f requires k, d >= 2");
    double lk = std::log2(static_cast<double>(k));
    double lkd = std::log2(static_cast<double>(k) * d);
    return lk * lk + 256.0 * lkd * (std::log2(lk) + d);
}

int ceil_log2(long long m) {
    if (m < 1) throw InvalidArgument("ceil_log2 of nonpositive value");
    int t = 0;
    long long pow = 1;
    while (pow < m) {
        pow <<= 1;
        ++t;
    }
    return t;
}

TAlpha t_alpha(int k, int d, long long x) {
    if (k < 2 || d < 2) throw InvalidArgument("t_alpha requires k, d >= 2");
    if (x < 2) throw InvalidArgument("t_alpha requires x >= 2");
    TAlpha out;
    out.t = ceil_log2(2LL * d * k);
    out.alpha = 32.0 * out.t * std::log2(2.0 * out.t * static_cast<double>(x));
    out.log2_alpha = std::log2(out.alpha);
    return out;
}

double theorem2_radicand_from_logx(double log2x, int d) {
    double loglogx = std::log2(log2x);
    return log2x - 512.0 * (std::sqrt(log2x) + std::log2(static_cast<double>(d))) *
                       (loglogx + d);
}

Theorem2K theorem2_k(long long x, int d) {
    if (x < 2 || d < 2) throw InvalidArgument("theorem2_k requires x, d >= 2");
    Theorem2K out;
    out.radicand = theorem2_radicand_from_logx(std::log2(static_cast<double>(x)), d);
    if (out.radicand <= 0.0) {
        out.k = 2;
        out.clamped = true;
        return out;
    }
    double k = std::exp2(std::sqrt(out.radicand));
    out.clamped = k < 2.0;
    out.k = out.clamped ? 2 : static_cast<long long>(k);
    return out;
}

EpsilonC epsilon_c(const Rational& eps) {
    if (eps.num <= 0 || eps.value() > 1.0)
        throw InvalidArgument("epsilon must be in (0, 1]");
    EpsilonC out;
    // base = 3/eps = 3*den/num, exponent = 2/eps = 2*den/num.
    long long exp_num = 2 * eps.den, exp_den = eps.num;
    long long g = std::gcd(exp_num, exp_den);
    exp_num /= g;
    exp_den /= g;
    bool base_integral = (3 * eps.den) % eps.num == 0;
    if (exp_den == 1 && base_integral) {
        BigInt base = (3 * eps.den) / eps.num;
        out.c = 1;
        for (long long i = 0; i < exp_num; ++i) out.c *= base;
        out.c += 1;
        out.ceiled = false;
        return out;
    }
    double value = std::pow(3.0 / eps.value(), 2.0 / eps.value());
    if (value > 1e18) throw InvalidArgument("epsilon_c: non-integral case too large");
    out.c = BigInt(static_cast<long long>(std::ceil(value))) + 1;
    out.ceiled = true;
    return out;
}

std::string BoundReport::to_text() const {
    std::ostringstream os;
    os << "k=" << k << '\n'
       << "d=" << d << '\n'
       << "x=" << x << '\n'
       << "vc=" << vc << '\n'
       << "epsilon=" << eps.to_string() << '\n'
       << "log2_f=" << log2_f_value << '\n'
       << "t=" << t << '\n'
       << "log2_alpha=" << log2_alpha << '\n'
       << "theorem1_exponent=" << theorem1_exponent << '\n'
       << "theorem2_k=" << theorem2_k_value << '\n'
       << "theorem2_clamped=" << (theorem2_clamped ? 1 : 0) << '\n'
       << "theorem2_log2_bound=" << theorem2_log2_bound << '\n'
       << "epsilon_c=" << epsilon_c_value << '\n';
    return os.str();
}

BoundReport make_bound_report(int k, int d, long long x, long long vc,
                              const Rational& eps) {
    BoundReport r;
    r.k = k;
    r.d = d;
    r.x = x;
    r.vc = vc;
    r.eps = eps;
    r.log2_f_value = log2_f(k, d);
    auto ta = t_alpha(k, d, x < 2 ? 2 : x);
    r.t = ta.t;
    r.log2_alpha = ta.log2_alpha;
    r.theorem1_exponent = vc >= 2 ? std::sqrt(std::log2(static_cast<double>(vc))) : 0.0;
    auto t2 = theorem2_k(x < 2 ? 2 : x, d);
    r.theorem2_k_value = t2.k;
    r.theorem2_clamped = t2.clamped;
    r.theorem2_log2_bound =
        std::log2(static_cast<double>(x < 2 ? 2 : x)) - std::log2(static_cast<double>(t2.k));
    r.epsilon_c_value = epsilon_c(eps).c;
    return r;
}

}  // namespace copshield
