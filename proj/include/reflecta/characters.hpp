#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflecta/complexes.hpp"
#include "reflecta/cyclotomic.hpp"
#include "reflecta/group.hpp"
#include "reflecta/homology.hpp"
#include "reflecta/reflection_rep.hpp"

namespace reflecta {

// A subgroup of an enumerated group together with its conjugacy classes.
struct ClassContext {
    TablePtr table;
    Subgroup group;
    ConjugacyClasses classes;
};
using ContextPtr = std::shared_ptr<const ClassContext>;

ContextPtr make_context(TablePtr table, Subgroup group);
ContextPtr whole_context(TablePtr table);
// Context of the standard parabolic W_K.
ContextPtr parabolic_context(TablePtr table, Mask K);

class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(ContextPtr ctx, std::vector<Cyclotomic> values);
    static ClassFunction zero(ContextPtr ctx);
    static ClassFunction trivial(ContextPtr ctx);
    static ClassFunction regular(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& at(int element) const;
    Cyclotomic degree() const { return at(0); }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction scaled(const Cyclotomic& c) const;
    bool operator==(const ClassFunction& o) const;
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }
    bool is_rational_integral() const;

private:
    void check_same(const ClassFunction& o) const;
    ContextPtr ctx_;
    std::vector<Cyclotomic> values_;
};

// (1/|G|) sum phi(g) conj(psi(g)); throws on mismatched groups.
Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi);
// Permutation character on the cosets of h inside the context group.
ClassFunction induced_trivial(const ContextPtr& ctx, const Subgroup& h);
ClassFunction restrict_to(const ClassFunction& phi, const ContextPtr& sub);
// Character of the reflection representation restricted to ctx.
ClassFunction reflection_character(const LinearGroup& lg, const ContextPtr& ctx);
ClassFunction exterior_power_character(const LinearGroup& lg, const ContextPtr& ctx, int p);

// Signed sum over J in T of Ind from W_{R\(U+J)} to W_{R\U} of the trivial
// character; the zero character when U and T meet.
struct RibbonCharacter {
    ClassFunction chi;
    std::vector<std::pair<int, Mask>> terms;  // (sign, inducing parabolic W_{R\(U+J)} as a mask)
};
RibbonCharacter ribbon_character(TablePtr table, Mask U, Mask T);
ClassFunction ribbon_character(const ContextPtr& ctx, Mask U, Mask T);

struct SuiteReport {
    bool pass = true;
    std::vector<std::string> witnesses;
    void fail(const std::string& why) {
        pass = false;
        witnesses.push_back(why);
    }
};

// Sum over T of the ribbon characters equals the regular character.
SuiteReport verify_solomon(TablePtr table);
// <chi^T, exterior power p> is 1 exactly when p = |T|.
SuiteReport verify_steinberg(const LinearGroup& lg);

// Character of the top reduced homology of the pointed complex (or of the
// type-selected complex when U is empty) computed from explicit top cycles,
// on the classes of W_{R\U}. Empty when homology is not top-concentrated.
struct HomologyCharacter {
    bool top_concentrated = false;
    std::vector<HomologyGroup> homology;
    std::optional<ClassFunction> chi;
    TopAction action;  // matrices of the generators of W_{R\U}
    bool relations_hold = false;
};
HomologyCharacter homology_character(const CosetComplex& full, Mask U, Mask T);
SuiteReport verify_homology_character(const CosetComplex& full, Mask U, Mask T);

}  // namespace reflecta
