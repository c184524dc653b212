#include "cyclo/residue.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclo/errors.hpp"

namespace cyclo {

std::int64_t bar(std::int64_t n, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("bar: modulus must be >= 1");
    std::int64_t v = n % modulus;
    if (v < 0) v += modulus;
    return v;
}

ResiduePair ResiduePair::of(std::int64_t n, std::int64_t modulus) {
    return ResiduePair{modulus, bar(n, modulus)};
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

std::int64_t mod_inverse_in_range(std::int64_t a, std::int64_t m) {
    if (m < 2) throw std::invalid_argument("mod_inverse_in_range: modulus must be >= 2");
    const std::int64_t a0 = bar(a, m);
    // Extended Euclid on (a0, m); moduli need not be prime.
    std::int64_t old_r = a0, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quotient = old_r / r;
        std::int64_t tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw NoInverseError("mod_inverse_in_range: gcd(" + std::to_string(a) + ", " +
                             std::to_string(m) + ") != 1");
    }
    return bar(old_s, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<std::int64_t, int>> factors;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
        if (n % d != 0) continue;
        int mult = 0;
        while (n % d == 0) {
            n /= d;
            ++mult;
        }
        factors.emplace_back(d, mult);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
    const auto factors = factorize(n);
    for (const auto& [prime, mult] : factors) {
        if (mult > 1) return 0;
    }
    return (factors.size() % 2 == 0) ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    std::int64_t phi = n;
    for (const auto& [prime, mult] : factorize(n)) {
        phi -= phi / prime;
    }
    return phi;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t k = i * i; k <= limit; k += i) {
            composite[static_cast<std::size_t>(k)] = true;
        }
    }
    return primes;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace cyclo
