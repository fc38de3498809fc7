#ifndef MK_PERMUTATION_HPP
#define MK_PERMUTATION_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mk {

struct ClosureCapExceeded : std::runtime_error {
    explicit ClosureCapExceeded(const std::string& m) : std::runtime_error(m) {}
};

/// Permutation of {0, .., n-1} stored as the image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// From 1-based disjoint cycles, e.g. {{2,5,7},{3,8}} on n points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    /// (a * b)(i) = a(b(i)): apply b first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const; // includes fixed points
    int cycle_count() const;
    /// Cycle notation with 1-based points, fixed points omitted; "()" for id.
    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

struct BlockSystem {
    std::vector<std::vector<int>> blocks; // partition of {0..n-1}
    size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

struct GroupProperties {
    size_t order = 0;
    bool order_exact = true; // false when the closure cap was hit
    std::vector<std::vector<int>> orbits;
    bool transitive = false;
    bool doubly_transitive = false;
    std::vector<BlockSystem> minimal_blocks; // nontrivial minimal systems
};

/// Finitely generated permutation group on {0..n-1}; closure computed lazily.
class PermGroup {
public:
    PermGroup(int n, std::vector<Permutation> generators);

    int degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    /// Full element enumeration by BFS; throws ClosureCapExceeded past cap.
    const std::vector<Permutation>& elements(size_t cap = 1'000'000) const;
    size_t order(size_t cap = 1'000'000) const { return elements(cap).size(); }

    std::vector<std::vector<int>> orbits() const;
    bool transitive() const;
    /// Orbit count on ordered distinct pairs equals 1 (for n > 1).
    bool doubly_transitive() const;

    /// Minimal block system containing {p, q}; Atkinson's union-find refinement.
    BlockSystem minimal_block_containing(int p, int q) const;
    /// All distinct nontrivial minimal block systems seeded from pairs {0, j}.
    std::vector<BlockSystem> minimal_blocks() const;
    /// Does the orbit of `set` under the group tile {0..n-1} disjointly?
    bool is_block(const std::vector<int>& set) const;
    /// Is the given partition preserved (blocks map to blocks) by all generators?
    bool is_block_system(const std::vector<std::vector<int>>& partition) const;

    GroupProperties properties(size_t cap = 1'000'000) const;

    /// Distinct images of `vec` under coordinate permutation by group elements,
    /// via BFS on the vector orbit (never materializes the group).
    size_t vector_orbit_size(const std::vector<int>& vec, size_t cap = 1'000'000) const;

private:
    int n_;
    std::vector<Permutation> gens_;
    mutable std::vector<Permutation> elements_;
};

} // namespace mk

#endif
