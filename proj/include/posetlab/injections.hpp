#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetlab/bigint.hpp"
#include "posetlab/extensions.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// tau_i with 1-based i in [1, n-1]: swap entries i, i+1 when incomparable.
Word tau(const Poset& p, Word word, int i);

struct InjectionImage {
    std::string tag;
    std::vector<int> payload;
    Word word;
};

// N_k -> N_{k-1} x [1, t(a)]: the nearest earlier element not below a jumps over it.
InjectionImage stanley_shift(const Poset& p, int a, const Word& word);
// Inverse of stanley_shift; nullopt when (word, r) is not in the image.
std::optional<Word> stanley_shift_inverse(const Poset& p, int a, const Word& word, int r);

// F(k+1,l+1) -> F(k,l+2).
InjectionImage gap_transfer(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word);
// F(k+1,l+1) -> F(k+2,l), by running gap_transfer on the dual with the triple reversed.
InjectionImage gap_transfer_dual(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word);
// F(k+1,l) -> F(k,l).
InjectionImage gap_shrink(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word);
// F(k+1,l) -> F(k+2,l); k = 0 allowed.
InjectionImage gap_grow(const Poset& p, const MarkedTriple& z, int k, int l, const Word& word);

enum class InjectionKind { stanley_shift, gap_transfer, gap_transfer_dual, gap_shrink, gap_grow };

const char* to_string(InjectionKind kind);

struct Window {
    int k = 0;
    int l = 0;
    Cell domain;
    Cell target;
};

Window window(InjectionKind kind, int k, int l);

// Interval bounds on the gap_transfer payload: `as_stated` caps the interior factor at
// b(z1,z2)-2; `widened` uses b(z1,z2)-1, which is what the move can actually reach.
enum class IntervalConvention { as_stated, widened };

struct CaseInterval {
    std::string tag;
    std::vector<int> extents;  // payload component j ranges over [1, extents[j]]
    Count size() const;
    bool contains(std::span<const int> payload) const;
};

struct InjectionBounds {
    std::vector<CaseInterval> cases;
    Count total() const;
    const CaseInterval* find(const std::string& tag) const;
};

InjectionBounds declared_intervals(InjectionKind kind, const Poset& p, const MarkedTriple& z, int k, int l,
                                   IntervalConvention convention = IntervalConvention::as_stated);
InjectionBounds stanley_intervals(const Poset& p, int a);

struct Collision {
    Word first;
    Word second;
    InjectionImage image;
};

struct InjectionCertificate {
    std::string name;
    int k = 0;
    int l = 0;
    int element = -1;  // stanley_shift only
    std::size_t domain_size = 0;
    std::size_t image_size = 0;
    Count target_size;
    Count interval_total;
    Count codomain_bound;  // interval_total * target_size
    std::vector<Collision> collisions;
    std::size_t collision_count = 0;
    std::size_t payload_violations = 0;
    std::size_t codomain_violations = 0;
    std::size_t roundtrip_failures = 0;
    bool hashed = false;

    bool injective() const { return collision_count == 0 && image_size == domain_size; }
    bool ok() const {
        return injective() && payload_violations == 0 && codomain_violations == 0 && roundtrip_failures == 0;
    }
};

inline constexpr std::size_t full_collision_limit = 100000;

// `extensions` must be every linear extension of p. Throws HypothesesNotMet when the
// target count is zero.
InjectionCertificate certify(InjectionKind kind, const Poset& p, const MarkedTriple& z, int k, int l,
                             std::span<const LinearExtension> extensions,
                             IntervalConvention convention = IntervalConvention::as_stated);
InjectionCertificate certify_stanley(const Poset& p, int a, int k, std::span<const LinearExtension> extensions);

// (k,l) windows whose target cell is nonzero.
std::vector<Cell> applicable_windows(InjectionKind kind, const FTable& F);

}  // namespace posetlab
