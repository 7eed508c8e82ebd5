#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflecta/presentation.hpp"

namespace reflecta {

class PresentationCollapse : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGroupBudget = 200000;

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Finite group with distinguished generators r_0..r_{l-1}. Elements are
// numbered 0..|W|-1 in breadth-first order of shortest words, so 0 is the
// identity and r_i is element 1+i when the generators are distinct.
class GroupTable {
public:
    static GroupTable enumerate(const GroupPresentation& pres, std::size_t budget = kDefaultGroupBudget);
    // Permutation group generated by the given images of 0..m-1.
    static GroupTable from_permutations(const std::vector<std::vector<int>>& gens, const std::string& label,
                                        std::size_t budget = kDefaultGroupBudget);
    static GroupTable load(std::istream& in);
    void save(std::ostream& out) const;

    std::size_t order() const { return n_; }
    int rank() const { return rank_; }
    Mask full_mask() const { return (Mask{1} << rank_) - 1; }
    const std::string& label() const { return label_; }
    const std::optional<GroupPresentation>& presentation() const { return pres_; }

    int generator(int i) const { return rmul(0, i); }
    int generator_order(int i) const { return gen_order_[static_cast<std::size_t>(i)]; }
    int rmul(int g, int i) const { return right_[static_cast<std::size_t>(g) * rank_ + i]; }
    int lmul(int i, int g) const { return left_[static_cast<std::size_t>(g) * rank_ + i]; }
    int mul(int g, int h) const;
    int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^{-1}
    int pow(int g, long k) const;
    int element_order(int g) const;
    int exponent() const;  // lcm of element orders
    const std::vector<int>& word(int g) const { return words_[static_cast<std::size_t>(g)]; }
    int length(int g) const { return static_cast<int>(words_[static_cast<std::size_t>(g)].size()); }
    int from_word(const std::vector<int>& w) const;

    // Point images for tables built from permutations; empty otherwise.
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    // Every defining relator evaluates to the identity at every element.
    bool verify_relators() const;

private:
    void finalize_from_right_table();

    std::size_t n_ = 0;
    int rank_ = 0;
    std::string label_;
    std::optional<GroupPresentation> pres_;
    std::vector<int> right_, left_, inv_, gen_order_;
    std::vector<int> parent_, last_gen_;
    std::vector<std::vector<int>> words_;
    std::vector<int> full_;  // full multiplication table when small
    std::vector<std::vector<int>> perms_;
};

// Subgroup stored as a sorted member list plus a membership bitset.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(std::size_t group_order, std::vector<int> members, std::vector<int> generators);

    const std::vector<int>& members() const { return members_; }
    const std::vector<int>& generators() const { return gens_; }
    std::size_t order() const { return members_.size(); }
    bool contains(int g) const { return (bits_[static_cast<std::size_t>(g) >> 6] >> (g & 63)) & 1u; }
    bool is_subset_of(const Subgroup& o) const;
    Subgroup intersect(const Subgroup& o) const;
    std::size_t hash() const { return hash_; }
    bool operator==(const Subgroup& o) const { return hash_ == o.hash_ && members_ == o.members_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }

private:
    std::vector<int> members_, gens_;
    std::vector<std::uint64_t> bits_;
    std::size_t hash_ = 0;
};

struct SubgroupHash {
    std::size_t operator()(const Subgroup& s) const { return s.hash(); }
};

Subgroup whole_group(const GroupTable& t);
Subgroup generated_subgroup(const GroupTable& t, const std::vector<int>& gens);
Subgroup standard_parabolic(const GroupTable& t, Mask J);
Subgroup conjugate_subgroup(const GroupTable& t, const Subgroup& h, int g);  // g H g^{-1}

// Left cosets xH in a deterministic order (by minimal element; the coset of
// the identity comes first). coset_of is indexed by element, -1 outside.
struct CosetPartition {
    std::vector<int> coset_of;
    std::vector<std::vector<int>> cosets;
    std::size_t count() const { return cosets.size(); }
};

CosetPartition cosets(const GroupTable& t, const Subgroup& h);
// Left cosets of h inside the subgroup g (h <= g).
CosetPartition cosets_within(const GroupTable& t, const Subgroup& g, const Subgroup& h);
// Left cosets of the standard parabolic W_K, found by right multiplication.
CosetPartition parabolic_cosets(const GroupTable& t, Mask K);

struct ConjugacyClasses {
    std::vector<int> class_of;  // per element of W, -1 outside the group
    std::vector<int> reps;      // minimal element index per class, increasing
    std::vector<std::size_t> sizes;
    std::size_t group_order = 0;
    std::size_t count() const { return reps.size(); }
};

ConjugacyClasses conjugacy_classes(const GroupTable& t);
ConjugacyClasses conjugacy_classes(const GroupTable& t, const Subgroup& h);

// Verdict for each J (as a bitmask) of
//   intersection over r in R\J of W_{R\{r}}  ==  W_J
// where the empty intersection is W.
struct IntersectionReport {
    std::vector<bool> holds;  // indexed by mask
    bool all() const;
};
IntersectionReport intersection_condition(const GroupTable& t);

}  // namespace reflecta
