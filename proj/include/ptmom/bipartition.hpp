#pragma once

#include <cstdint>
#include <stdexcept>

namespace ptmom {

// Qubit register split A|B. Qubit 0 is the most significant bit of a
// computational-basis index, subsystem A occupies qubits 0..n_a-1, so that
// index(a, b) = a * 2^n_b + b.
struct Bipartition {
    int n_a = 1;
    int n_b = 1;

    Bipartition() = default;
    Bipartition(int na, int nb) : n_a(na), n_b(nb) {
        if (na < 1 || nb < 1 || na + nb > 14)
            throw std::invalid_argument("Bipartition: need n_a >= 1, n_b >= 1, n_a + n_b <= 14");
    }

    int total() const { return n_a + n_b; }
    std::size_t dim_a() const { return std::size_t(1) << n_a; }
    std::size_t dim_b() const { return std::size_t(1) << n_b; }
    std::size_t dim() const { return std::size_t(1) << (n_a + n_b); }

    std::size_t a_part(std::size_t idx) const { return idx >> n_b; }
    std::size_t b_part(std::size_t idx) const { return idx & (dim_b() - 1); }
    std::size_t index(std::size_t a, std::size_t b) const { return (a << n_b) | b; }

    bool operator==(const Bipartition&) const = default;
};

inline int popcount_u64(std::uint64_t x) { return __builtin_popcountll(x); }

// Number of set bits in the A (resp. B) part of a basis index.
inline int charge_a(const Bipartition& bp, std::size_t idx) { return popcount_u64(bp.a_part(idx)); }
inline int charge_b(const Bipartition& bp, std::size_t idx) { return popcount_u64(bp.b_part(idx)); }
inline int charge_total(std::size_t idx) { return popcount_u64(idx); }

}  // namespace ptmom
