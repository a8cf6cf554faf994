#include "rotlab/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rotlab {

IndexSubset::IndexSubset(std::initializer_list<int> ls) : IndexSubset(std::vector<int>(ls)) {}

IndexSubset::IndexSubset(std::vector<int> members) : members_(std::move(members)) {
    for (size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1 || (i > 0 && members_[i] <= members_[i - 1]))
            throw std::invalid_argument("subset members must be strictly increasing and >= 1");
    }
}

IndexSubset IndexSubset::full(int n) {
    std::vector<int> m;
    for (int i = 1; i <= n; ++i) m.push_back(i);
    return IndexSubset(std::move(m));
}

std::vector<IndexSubset> IndexSubset::all(int n) {
    std::vector<IndexSubset> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> m;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) m.push_back(i);
        out.emplace_back(std::move(m));
    }
    std::stable_sort(out.begin(), out.end(), [](const IndexSubset& a, const IndexSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    return out;
}

std::vector<IndexSubset> IndexSubset::of_cardinality(int n, int lo, int hi) {
    std::vector<IndexSubset> out;
    for (const IndexSubset& s : all(n))
        if (int(s.size()) >= lo && int(s.size()) <= hi) out.push_back(s);
    return out;
}

bool IndexSubset::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::string IndexSubset::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ",";
        os << members_[i];
    }
    os << "}";
    return os.str();
}

BarPattern BarPattern::from_mask(unsigned mask, int n) {
    std::set<int> b;
    for (int i = 1; i <= n; ++i)
        if (mask & (1u << (i - 1))) b.insert(i);
    return BarPattern(std::move(b));
}

std::string BarPattern::str(int n) const {
    std::string s;
    for (int i = 1; i <= n; ++i) s += is_barred(i) ? 'b' : '.';
    return s;
}

Gen family_gen(VarFamily f, int index) {
    return f == VarFamily::u ? u(uint16_t(index)) : v(uint16_t(index));
}

// Recursion on the largest index m of S: e_k(S+m) = x_m e_{k-1}(S) + e_k(S),
// built by scanning S in increasing order. O(output size).
FreePoly elem(int k, const IndexSubset& s, VarFamily family, const AlphabetPtr& alphabet) {
    if (k < 0 || k > int(s.size())) return FreePoly::zero(alphabet);
    std::vector<FreePoly> row(size_t(k) + 1, FreePoly::zero(alphabet));
    row[0] = FreePoly::one(alphabet);
    for (int m : s.members()) {
        FreePoly xm = FreePoly::gen(alphabet, family_gen(family, m));
        for (int j = k; j >= 1; --j)
            row[size_t(j)] = xm * row[size_t(j) - 1] + row[size_t(j)];
    }
    return row[size_t(k)];
}

FreePoly super_elem(int k, const IndexSubset& s, const BarPattern& bars, VarFamily family,
                    const AlphabetPtr& alphabet) {
    if (k < 0) return FreePoly::zero(alphabet);
    // Adding a new largest index m: barred letters may repeat, so
    //   e_k(S+m) = e_k(S) + sum_{j>=1} x_m^j e_{k-j}(S)   (m barred)
    //   e_k(S+m) = e_k(S) + x_m e_{k-1}(S)                (m unbarred)
    std::vector<FreePoly> row(size_t(k) + 1, FreePoly::zero(alphabet));
    row[0] = FreePoly::one(alphabet);
    for (int m : s.members()) {
        FreePoly xm = FreePoly::gen(alphabet, family_gen(family, m));
        if (bars.is_barred(m)) {
            std::vector<FreePoly> next = row;
            for (int j = 1; j <= k; ++j) {
                FreePoly pw = FreePoly::word(alphabet, Word::power(family_gen(family, m), size_t(j)));
                for (int t = j; t <= k; ++t) next[size_t(t)] += pw * row[size_t(t - j)];
            }
            row = std::move(next);
        } else {
            for (int j = k; j >= 1; --j)
                row[size_t(j)] = row[size_t(j)] + xm * row[size_t(j) - 1];
        }
    }
    return row[size_t(k)];
}

CentralPoly product_over_subset(const std::vector<CentralPoly>& factors, const IndexSubset& s) {
    if (factors.empty()) throw std::invalid_argument("product_over_subset: no factors");
    const CentralPoly& model = factors.front();
    for (const CentralPoly& f : factors) {
        require_same_alphabet(model.alphabet(), f.alphabet(), "product_over_subset");
        if (f.bound() != model.bound())
            throw std::invalid_argument("product_over_subset: truncation bound mismatch");
    }
    CentralPoly out = CentralPoly::one(model.alphabet(), model.bound());
    const auto& ms = s.members();
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) { // largest index leftmost
        int i = *it;
        if (i < 1 || size_t(i) > factors.size())
            throw std::out_of_range("product_over_subset: index " + std::to_string(i) + " out of range");
        out *= factors[size_t(i - 1)];
    }
    return out;
}

} // namespace rotlab
