#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reflecta/complexes.hpp"
#include "reflecta/flats.hpp"
#include "reflecta/homology.hpp"

namespace reflecta {

// Subsets of {1..n} as bitmasks: element i is bit i-1.
using Block = std::uint32_t;
// c_1..c_{k-1} > 0, c_k >= 0.
using Composition = std::vector<int>;

bool valid_composition(int n, const Composition& c);
// Every composition of n whose last part may be zero.
std::vector<Composition> pointed_compositions(int n);
// Des(c) = {r_{c_1}, r_{c_1+c_2}, ...} with r_i at bit i-1.
Mask descent_mask(const Composition& c);
std::string composition_to_string(const Composition& c);

// Ordered blocks of {1..n}; only the last block may be empty.
struct PointedSetComposition {
    std::vector<Block> blocks;

    Composition type() const;
    // Prefix unions B_1, B_1+B_2, ... excluding the whole last-block union.
    std::vector<Block> prefixes() const;
    // True when every prefix of this one is a prefix of o.
    bool coarsens(const PointedSetComposition& o) const;
    std::string to_string() const;
    bool operator==(const PointedSetComposition& o) const { return blocks == o.blocks; }
    bool operator<(const PointedSetComposition& o) const { return blocks < o.blocks; }
};

// Unordered nonempty blocks plus one distinguished block (possibly empty).
struct PointedPartition {
    std::vector<Block> blocks;  // sorted
    Block pointed = 0;

    // Blocks of {1..n+1} with n+1 added to the distinguished block.
    std::vector<std::uint64_t> unpointed(int n) const;
    bool refines(const PointedPartition& o, int n) const;
    std::string to_string() const;
    bool operator==(const PointedPartition& o) const { return blocks == o.blocks && pointed == o.pointed; }
    bool operator<(const PointedPartition& o) const {
        return pointed != o.pointed ? pointed < o.pointed : blocks < o.blocks;
    }
};

// Forget the order, keep the last block distinguished.
PointedPartition support(const PointedSetComposition& f);
PointedSetComposition permute(const std::vector<int>& perm, const PointedSetComposition& f);
PointedPartition permute(const std::vector<int>& perm, const PointedPartition& p);

// Faces of pointed set compositions refined by some composition of type c.
struct DeltaC {
    int n = 0;
    Composition c;
    std::vector<Block> vertices;  // vertex v is the prefix set vertices[v]
    SimplicialComplex complex;

    std::vector<PointedSetComposition> faces() const;  // includes the one-block face
    PointedSetComposition face(const std::vector<int>& simplex) const;
};
DeltaC build_delta_c(int n, const Composition& c);

// Supports of the faces of Delta_c ordered by refinement; top is the
// one-block partition.
struct PiC {
    int n = 0;
    Composition c;
    std::vector<PointedPartition> elements;
    Poset order;
    int top = -1;

    // Order complex of everything below the top.
    SimplicialComplex proper_part() const;
};
PiC build_pi_c(int n, const Composition& c);

// Set partitions of {1..m} with block sizes divisible by d, ordered by
// refinement; an extra bottom element is added when d > 1.
struct PartitionLattice {
    std::vector<std::vector<std::uint64_t>> partitions;  // bottom first when added, sorted blocks
    Poset order;
    int bottom = -1;
    int top = -1;
};
PartitionLattice divisible_partition_lattice(int m, int d);

// Permutations of S_n with descent composition c; zero when c ends in 0.
long ribbon_specht_dim(const Composition& c);

struct ConversionReport {
    bool pass = true;
    std::size_t faces_checked = 0;
    std::size_t flats_checked = 0;
    std::vector<std::string> witnesses;
};
// Compares Delta_c and Pi_c with the pointed complex of S_{n+1} at
// U = {r_n}, T = Des(c) built from cosets.
ConversionReport conversion_check(int n, const Composition& c);

struct EJReport {
    bool pass = true;
    std::vector<HomologyGroup> delta_homology;
    std::vector<HomologyGroup> pi_homology;
    long ribbon_dim = 0;
    bool characters_checked = false;
    std::vector<std::string> witnesses;
};
// Homology of Delta_c against the proper part of Pi_c and the ribbon count;
// for n <= 5 also compares S_n characters on the top homology.
EJReport verify_ej(int n, const Composition& c);

}  // namespace reflecta
