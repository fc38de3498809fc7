#include "mk/permutation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace mk {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw std::invalid_argument("Permutation::from_cycles: point out of range");
            v[static_cast<size_t>(from)] = to;
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> v(a.img_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.img_[static_cast<size_t>(b.img_[i])];
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = static_cast<int>(i);
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            cyc.push_back(j);
            j = img_[static_cast<size_t>(j)];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::string Permutation::cycle_string() const {
    std::string s;
    for (const auto& cyc : cycles()) {
        if (cyc.size() <= 1) continue;
        s += "(";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(cyc[i] + 1);
        }
        s += ")";
    }
    if (s.empty()) s = "()";
    return s;
}

PermGroup::PermGroup(int n, std::vector<Permutation> generators) : n_(n), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.size() != n_) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (gens_.empty()) gens_.push_back(Permutation::identity(n_));
}

const std::vector<Permutation>& PermGroup::elements(size_t cap) const {
    if (!elements_.empty()) return elements_;
    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(n_);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens_) {
            Permutation nxt = g * cur;
            if (seen.insert(nxt).second) {
                if (seen.size() > cap) throw ClosureCapExceeded("PermGroup: closure cap exceeded");
                queue.push_back(nxt);
            }
        }
    }
    elements_.assign(seen.begin(), seen.end());
    return elements_;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> orbit;
        std::deque<int> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            orbit.push_back(i);
            for (const auto& g : gens_) {
                int j = g(i);
                if (!seen[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = 1;
                    queue.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool PermGroup::transitive() const { return orbits().size() == 1; }

bool PermGroup::doubly_transitive() const {
    if (n_ == 1) return true;
    if (!transitive()) return false;
    // BFS the orbit of the ordered pair (0, 1); double transitivity <=> it
    // reaches all n(n-1) ordered distinct pairs.
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    seen.insert({0, 1});
    queue.push_back({0, 1});
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (const auto& g : gens_) {
            std::pair<int, int> nxt{g(x), g(y)};
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return seen.size() == static_cast<size_t>(n_) * static_cast<size_t>(n_ - 1);
}

BlockSystem PermGroup::minimal_block_containing(int p, int q) const {
    // Atkinson's algorithm: union-find refinement seeded with p ~ q.
    std::vector<int> parent(static_cast<size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    };
    std::deque<std::pair<int, int>> pending{{p, q}};
    unite(p, q);
    while (!pending.empty()) {
        auto [a, b] = pending.front();
        pending.pop_front();
        for (const auto& g : gens_) {
            int ga = g(a), gb = g(b);
            if (unite(ga, gb)) pending.push_back({ga, gb});
        }
    }
    std::vector<std::vector<int>> classes(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) classes[static_cast<size_t>(find(i))].push_back(i);
    BlockSystem bs;
    for (auto& cl : classes)
        if (!cl.empty()) bs.blocks.push_back(std::move(cl));
    std::sort(bs.blocks.begin(), bs.blocks.end());
    return bs;
}

std::vector<BlockSystem> PermGroup::minimal_blocks() const {
    std::vector<BlockSystem> out;
    std::set<std::vector<std::vector<int>>> seen;
    for (int j = 1; j < n_; ++j) {
        BlockSystem bs = minimal_block_containing(0, j);
        if (bs.blocks.size() <= 1 || bs.blocks.size() == static_cast<size_t>(n_)) continue;
        if (seen.insert(bs.blocks).second) out.push_back(std::move(bs));
    }
    return out;
}

bool PermGroup::is_block(const std::vector<int>& set) const {
    std::set<std::set<int>> seen;
    std::set<int> base(set.begin(), set.end());
    std::deque<std::set<int>> queue{base};
    seen.insert(base);
    while (!queue.empty()) {
        std::set<int> cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens_) {
            std::set<int> img;
            for (int x : cur) img.insert(g(x));
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    // translates must tile: pairwise disjoint or equal
    std::vector<std::set<int>> sets(seen.begin(), seen.end());
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) return false;
        }
    return true;
}

bool PermGroup::is_block_system(const std::vector<std::vector<int>>& partition) const {
    std::vector<int> block_of(static_cast<size_t>(n_), -1);
    for (size_t b = 0; b < partition.size(); ++b)
        for (int x : partition[b]) {
            if (x < 0 || x >= n_ || block_of[static_cast<size_t>(x)] != -1) return false;
            block_of[static_cast<size_t>(x)] = static_cast<int>(b);
        }
    for (int x = 0; x < n_; ++x)
        if (block_of[static_cast<size_t>(x)] == -1) return false;
    for (const auto& g : gens_)
        for (const auto& block : partition) {
            int target = block_of[static_cast<size_t>(g(block.front()))];
            for (int x : block)
                if (block_of[static_cast<size_t>(g(x))] != target) return false;
        }
    return true;
}

GroupProperties PermGroup::properties(size_t cap) const {
    GroupProperties p;
    try {
        p.order = order(cap);
        p.order_exact = true;
    } catch (const ClosureCapExceeded&) {
        p.order = cap;
        p.order_exact = false;
    }
    p.orbits = orbits();
    p.transitive = p.orbits.size() == 1;
    p.doubly_transitive = doubly_transitive();
    p.minimal_blocks = minimal_blocks();
    return p;
}

size_t PermGroup::vector_orbit_size(const std::vector<int>& vec, size_t cap) const {
    if (static_cast<int>(vec.size()) != n_)
        throw std::invalid_argument("vector_orbit_size: length mismatch");
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    seen.insert(vec);
    queue.push_back(vec);
    while (!queue.empty()) {
        std::vector<int> cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens_) {
            std::vector<int> img(cur.size());
            for (int i = 0; i < n_; ++i) img[static_cast<size_t>(i)] = cur[static_cast<size_t>(g(i))];
            if (seen.insert(img).second) {
                if (seen.size() > cap) throw ClosureCapExceeded("vector orbit cap exceeded");
                queue.push_back(img);
            }
        }
    }
    return seen.size();
}

} // namespace mk
