#pragma once

#include "rotlab/central_poly.hpp"

#include <set>
#include <vector>

namespace rotlab {

/// Strictly increasing subset of {1..N}.
class IndexSubset {
public:
    IndexSubset() = default;
    IndexSubset(std::initializer_list<int> ls);
    explicit IndexSubset(std::vector<int> members);

    static IndexSubset full(int n);
    /// All 2^n subsets of {1..n}, smallest cardinality first, then lex.
    static std::vector<IndexSubset> all(int n);
    /// All subsets with lo <= |S| <= hi.
    static std::vector<IndexSubset> of_cardinality(int n, int lo, int hi);

    const std::vector<int>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(int i) const;

    std::string str() const;

    friend bool operator==(const IndexSubset& a, const IndexSubset& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<int> members_;
};

/// Which indices of {1..N} are barred (fixed for an experiment).
class BarPattern {
public:
    BarPattern() = default;
    explicit BarPattern(std::set<int> barred) : barred_(std::move(barred)) {}

    /// 2^n patterns over {1..n}; bit i-1 of the mask bars index i.
    static BarPattern from_mask(unsigned mask, int n);

    bool is_barred(int i) const { return barred_.count(i) != 0; }
    const std::set<int>& barred() const { return barred_; }
    std::string str(int n) const;

private:
    std::set<int> barred_;
};

enum class VarFamily { u, v };

Gen family_gen(VarFamily f, int index);

/// Noncommutative elementary symmetric function e_k over the
/// sub-alphabet S: the sum of all strictly decreasing k-fold products.
/// e_0 = 1; zero unless 0 <= k <= |S|.
FreePoly elem(int k, const IndexSubset& s, VarFamily family, const AlphabetPtr& alphabet);

/// Super variant: weakly decreasing products where every unbarred index
/// must strictly decrease. Can be nonzero for all k >= 0 once S has a
/// barred index.
FreePoly super_elem(int k, const IndexSubset& s, const BarPattern& bars, VarFamily family,
                    const AlphabetPtr& alphabet);

/// Ordered product over S with the largest index leftmost; empty S -> 1.
CentralPoly product_over_subset(const std::vector<CentralPoly>& factors, const IndexSubset& s);

} // namespace rotlab
