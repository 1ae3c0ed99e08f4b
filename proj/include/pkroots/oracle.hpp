#pragma once

#include <functional>

#include "pkroots/abelian.hpp"

namespace pkroots {

// Exhaustively enumerated finite group, the ground truth side of every
// decision. Shares only the exact-algebra layer with the criterion code.
struct EnumeratedGroup {
    const TriangularGroup* ctx = nullptr;
    std::vector<Matrix> elements; // deterministic closure order, identity first
    std::unordered_map<std::string, int> index;
    std::vector<int> depth; // word length from the generators
    long cap = 0;

    int index_of(const Matrix& m) const {
        auto it = index.find(m.canonical_key());
        return it == index.end() ? -1 : it->second;
    }
    long size() const { return long(elements.size()); }
};

EnumeratedGroup enumerate_group(const TriangularGroup& ctx, long cap);

// Exact image of the k-th power map with per-element root lists.
struct PowerImage {
    long k = 1;
    std::vector<char> marked;            // element index -> in P_k(G)
    std::vector<int> preimage_count;     // multiplicities
    std::vector<std::vector<int>> roots; // element index -> indices of its k-th roots
    long image_size() const;
};

PowerImage power_image(const EnumeratedGroup& e, long k);

// True iff every element of xN is a k-th power.
bool coset_coverage_truth(const EnumeratedGroup& e, const Matrix& x, long k);
bool coset_coverage_truth(const EnumeratedGroup& e, const PowerImage& img, const Matrix& x);

std::vector<int> centralizer(const EnumeratedGroup& e, const Matrix& x);
std::vector<int> center(const EnumeratedGroup& e);

// Closure of the given element indices as a subgroup (deterministic order).
std::vector<int> subgroup_closure(const EnumeratedGroup& e, const std::vector<int>& gens);

// A small generating set of the subgroup given as an index list.
std::vector<int> generating_subset(const EnumeratedGroup& e, const std::vector<int>& subgroup);

// Center of the subgroup given as an index list.
std::vector<int> center_of_subgroup(const EnumeratedGroup& e, const std::vector<int>& subgroup);

struct CompareRow {
    ClassKey cls;
    long k = 1;
    bool criterion = false;
    bool truth = false;
    bool match = false;
    long pk_size = 0;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    bool all_match = true;
};

// Cross-check an injected coset decision against exhaustive coverage for
// every diagonal class and every requested k. Fails loudly on mismatch only
// through the report; the caller decides what loud means.
CompareReport compare_all(const EnumeratedGroup& e, const std::vector<long>& ks,
                          const std::function<bool(const Matrix&, long)>& decision);

} // namespace pkroots
