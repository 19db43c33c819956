#include "tqf/hurwitz.hpp"

#include <mutex>
#include <unordered_map>

namespace tqf {

namespace {

std::mutex memo_mutex;
std::unordered_map<i64, Rational> memo;

Rational hurwitz_compute(i64 D) {
    // weighted count of reduced forms (a,b,c), b^2 - 4ac = -D, |b| <= a <= c,
    // b >= 0 when |b| = a or a = c; weight 1/3 on a(x^2+xy+y^2), 1/2 on
    // a(x^2+y^2), 1 otherwise
    Rational total(0);
    i64 bmax = isqrt(D / 3);
    for (i64 b = D % 2; b <= bmax; b += 2) {
        i64 ac4 = b * b + D;
        if (ac4 % 4 != 0) continue;
        i64 ac = ac4 / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            i64 c = ac / a;
            if (b == a && a == c) total += Rational(1, 3);
            else if (b == 0 && a == c) total += Rational(1, 2);
            else if (b == 0 || b == a || a == c) total += Rational(1);
            else total += Rational(2);  // both signs of b
        }
    }
    return total;
}

}  // namespace

Rational hurwitz_H(i64 D) {
    if (D < 0) throw std::domain_error("hurwitz_H expects a nonnegative argument");
    if (D == 0) return Rational(-1, 12);
    if (D % 4 == 1 || D % 4 == 2) return Rational(0);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(D);
        if (it != memo.end()) return it->second;
    }
    Rational v = hurwitz_compute(D);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(D, std::move(v)).first->second;
}

Rational modified_H(i64 N1, i64 N2, i64 D) {
    if (N1 <= 0 || N2 <= 0 || !is_squarefree(N1) || !is_squarefree(N2))
        throw std::domain_error("modified_H requires positive squarefree parameters");
    if (std::gcd(N1, N2) != 1) throw std::domain_error("modified_H requires coprime parameters");
    if (D < 0) throw std::domain_error("modified_H expects a nonnegative argument");
    if (D == 0) {
        Rational v(-1, 12);
        for (i64 p : prime_factors(N1)) v *= Rational(1 - p);
        for (i64 p : prime_factors(N2)) v *= Rational(1 + p);
        return v;
    }
    if (D % 4 == 1 || D % 4 == 2) return Rational(0);

    // conductor extraction: the largest f supported on primes of N1*N2 with
    // f^2 | D and -D/f^2 still a discriminant
    std::vector<i64> cands{1};
    for (i64 p : prime_factors(mulck(N1, N2))) {
        i64 pe = 1;
        int emax = 0;
        while (D % mulck(mulck(pe, p), mulck(pe, p)) == 0) {
            pe = mulck(pe, p);
            ++emax;
        }
        size_t sz = cands.size();
        i64 q = 1;
        for (int i = 0; i < emax; ++i) {
            q = mulck(q, p);
            for (size_t j = 0; j < sz; ++j) cands.push_back(mulck(cands[j], q));
        }
    }
    std::sort(cands.rbegin(), cands.rend());
    i64 f = 1;
    for (i64 cand : cands) {
        i64 q = D / (cand * cand);
        if (q % 4 == 0 || q % 4 == 3) { f = cand; break; }
    }
    i64 D2 = D / (f * f);

    Rational v = hurwitz_H(D2);
    for (i64 p : prime_factors(N1)) v *= Rational(1 - kronecker(-D2, p));
    for (i64 p : prime_factors(N2)) {
        i64 fp = 1;
        while (f % (fp * p) == 0) fp *= p;
        i64 chi = kronecker(-D2, p);
        v *= Rational(2 * p * fp - p - 1 - chi * (2 * fp - p - 1), p - 1);
    }
    return v;
}

i64 type_number(i64 N, i64 F) {
    if (N <= 1 || F <= 0 || !is_squarefree(N) || !is_squarefree(F))
        throw std::domain_error("type_number requires squarefree parameters, N > 1");
    if (std::gcd(N, F) != 1) throw std::domain_error("type_number requires coprime parameters");
    if (num_prime_factors(N) % 2 == 0)
        throw std::domain_error("type_number requires N with an odd number of prime factors");
    i64 NF = mulck(N, F);
    Rational total(0);
    for (i64 n : divisors(NF)) {
        for (i64 r = 0; r * r <= 4 * n; r += n) {
            Rational h = modified_H(N, F, 4 * n - r * r);
            total += (r == 0) ? h : h + h;  // +-r
        }
    }
    int e = num_prime_factors(NF);
    Rational t = total / pow2_rational(e + 1);
    if (!t.is_integer() || t.sign() <= 0)
        throw std::logic_error("type number came out non-integral or non-positive");
    return t.as_i64();
}

i64 class_number_4N(i64 N) {
    if (N <= 0 || N % 2 == 0 || !is_squarefree(N))
        throw std::domain_error("class_number_4N requires odd squarefree N");
    int s = num_prime_factors(N);
    Rational v = Rational(N, 6) + Rational(5, 4) - Rational(kronecker(-4, N), 4) -
                 Rational(kronecker(-3, N), 6);
    int k3 = kronecker(N, 3);
    v += Rational(1 - k3 * k3, 2);
    Rational sum(0);
    for (i64 d : divisors(N)) {
        if (d == 1) continue;
        sum += Rational(3) * hurwitz_H(4 * d) + hurwitz_H(8 * d);
    }
    v += sum / Rational(4);
    v *= pow2_rational(s);
    if (!v.is_integer() || v.sign() <= 0) throw std::logic_error("class number formula gave a non-integer");
    return v.as_i64();
}

}  // namespace tqf
