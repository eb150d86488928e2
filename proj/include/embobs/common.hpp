#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace embobs {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Malformed or inconsistent input (files, vertex ids, chain terms, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A geometric predicate could not be decided generically within the retry budget,
/// or a configuration failed a genericity requirement.
struct genericity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline Int mod2(const Int& x) { return ((x % 2) + 2) % 2; }

inline int sgn(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }
inline int sgn(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

/// Canonical "p/q" form, q >= 1, gcd(p,q) = 1.
inline std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw input_error("malformed rational: " + s);
    }
}

/// FNV-1a, used for input provenance hashes and certificate transcripts.
inline std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

/// Deterministic RNG. All randomness in the library flows through this so that a
/// (seed, version) pair pins every output bit-for-bit.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi]; distribution detail is part of the
    /// determinism contract, so no std::uniform_int_distribution here.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 engine_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27; x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

}  // namespace embobs
