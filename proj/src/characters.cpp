#include "reflecta/characters.hpp"

#include <sstream>
#include <stdexcept>

#include "reflecta/polynomial.hpp"

namespace reflecta {

ContextPtr make_context(TablePtr table, Subgroup group) {
    auto ctx = std::make_shared<ClassContext>();
    ctx->classes = conjugacy_classes(*table, group);
    ctx->group = std::move(group);
    ctx->table = std::move(table);
    return ctx;
}

ContextPtr whole_context(TablePtr table) {
    Subgroup g = whole_group(*table);
    return make_context(std::move(table), std::move(g));
}

ContextPtr parabolic_context(TablePtr table, Mask K) {
    Subgroup g = standard_parabolic(*table, K);
    return make_context(std::move(table), std::move(g));
}

ClassFunction::ClassFunction(ContextPtr ctx, std::vector<Cyclotomic> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
    if (!ctx_ || values_.size() != ctx_->classes.count())
        throw std::invalid_argument("class function: one value per conjugacy class required");
}

ClassFunction ClassFunction::zero(ContextPtr ctx) {
    std::size_t n = ctx->classes.count();
    return ClassFunction(std::move(ctx), std::vector<Cyclotomic>(n, Cyclotomic(0)));
}

ClassFunction ClassFunction::trivial(ContextPtr ctx) {
    std::size_t n = ctx->classes.count();
    return ClassFunction(std::move(ctx), std::vector<Cyclotomic>(n, Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(ContextPtr ctx) {
    std::vector<Cyclotomic> v(ctx->classes.count(), Cyclotomic(0));
    v[static_cast<std::size_t>(ctx->classes.class_of[0])] = Cyclotomic(static_cast<long>(ctx->group.order()));
    return ClassFunction(std::move(ctx), std::move(v));
}

const Cyclotomic& ClassFunction::at(int element) const {
    int c = ctx_->classes.class_of[static_cast<std::size_t>(element)];
    if (c < 0) throw std::out_of_range("class function: element outside the group");
    return values_[static_cast<std::size_t>(c)];
}

void ClassFunction::check_same(const ClassFunction& o) const {
    if (!ctx_ || !o.ctx_ || (ctx_ != o.ctx_ && ctx_->group != o.ctx_->group))
        throw std::invalid_argument("class function: different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    check_same(o);
    ClassFunction r = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] += o.values_[i];
    return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    check_same(o);
    ClassFunction r = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] -= o.values_[i];
    return r;
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
    ClassFunction r = *this;
    for (auto& v : r.values_) v *= c;
    return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    check_same(o);
    return values_ == o.values_;
}

bool ClassFunction::is_rational_integral() const {
    for (const auto& v : values_)
        if (!v.is_integer()) return false;
    return true;
}

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi) {
    if (!phi.context() || !psi.context() ||
        (phi.context() != psi.context() && phi.context()->group != psi.context()->group))
        throw std::invalid_argument("inner product: different groups");
    const auto& cl = phi.context()->classes;
    Cyclotomic s(0);
    for (std::size_t c = 0; c < cl.count(); ++c)
        s += Cyclotomic(static_cast<long>(cl.sizes[c])) * phi.values()[c] * psi.values()[c].conj();
    return s / Cyclotomic(static_cast<long>(cl.group_order));
}

ClassFunction induced_trivial(const ContextPtr& ctx, const Subgroup& h) {
    if (!h.is_subset_of(ctx->group)) throw std::invalid_argument("induced character: not a subgroup");
    const GroupTable& t = *ctx->table;
    CosetPartition cp = cosets_within(t, ctx->group, h);
    std::vector<Cyclotomic> v;
    v.reserve(ctx->classes.count());
    for (int g : ctx->classes.reps) {
        long fixed = 0;
        for (const auto& c : cp.cosets) {
            int x = c.front();
            if (h.contains(t.mul(t.mul(t.inv(x), g), x))) ++fixed;
        }
        v.emplace_back(fixed);
    }
    return ClassFunction(ctx, std::move(v));
}

ClassFunction restrict_to(const ClassFunction& phi, const ContextPtr& sub) {
    if (!sub->group.is_subset_of(phi.context()->group))
        throw std::invalid_argument("restriction: not a subgroup");
    std::vector<Cyclotomic> v;
    for (int g : sub->classes.reps) v.push_back(phi.at(g));
    return ClassFunction(sub, std::move(v));
}

ClassFunction reflection_character(const LinearGroup& lg, const ContextPtr& ctx) {
    std::vector<Cyclotomic> v;
    for (int g : ctx->classes.reps) {
        const CycloMatrix& m = lg.matrix(g);
        Cyclotomic tr(0);
        for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
        v.push_back(tr);
    }
    return ClassFunction(ctx, std::move(v));
}

ClassFunction exterior_power_character(const LinearGroup& lg, const ContextPtr& ctx, int p) {
    if (p < 0 || p > static_cast<int>(lg.dim())) throw std::out_of_range("exterior power: degree out of range");
    std::vector<Cyclotomic> v;
    for (int g : ctx->classes.reps) v.push_back(lg.det_one_plus(g).coeff(p));
    return ClassFunction(ctx, std::move(v));
}

ClassFunction ribbon_character(const ContextPtr& ctx, Mask U, Mask T) {
    if (U & T) return ClassFunction::zero(ctx);
    const GroupTable& t = *ctx->table;
    Mask full = t.full_mask();
    ClassFunction chi = ClassFunction::zero(ctx);
    for (Mask J = T;; J = (J - 1) & T) {
        ClassFunction ind = induced_trivial(ctx, standard_parabolic(t, full & ~(U | J)));
        chi = (popcount(T & ~J) % 2 == 0) ? chi + ind : chi - ind;
        if (J == 0) break;
    }
    return chi;
}

RibbonCharacter ribbon_character(TablePtr table, Mask U, Mask T) {
    Mask full = table->full_mask();
    ContextPtr ctx = parabolic_context(table, full & ~U);
    RibbonCharacter r;
    r.chi = ribbon_character(ctx, U, T);
    if (!(U & T))
        for (Mask J = T;; J = (J - 1) & T) {
            r.terms.emplace_back(popcount(T & ~J) % 2 == 0 ? 1 : -1, full & ~(U | J));
            if (J == 0) break;
        }
    return r;
}

SuiteReport verify_solomon(TablePtr table) {
    SuiteReport rep;
    ContextPtr ctx = whole_context(table);
    ClassFunction sum = ClassFunction::zero(ctx);
    for (Mask T = 0; T <= table->full_mask(); ++T) sum = sum + ribbon_character(ctx, 0, T);
    ClassFunction reg = ClassFunction::regular(ctx);
    for (std::size_t c = 0; c < ctx->classes.count(); ++c)
        if (sum.values()[c] != reg.values()[c]) {
            std::ostringstream os;
            os << "class of element " << ctx->classes.reps[c] << ": sum " << sum.values()[c].to_string()
               << ", regular " << reg.values()[c].to_string();
            rep.fail(os.str());
        }
    return rep;
}

SuiteReport verify_steinberg(const LinearGroup& lg) {
    SuiteReport rep;
    ContextPtr ctx = whole_context(lg.table_ptr());
    int l = static_cast<int>(lg.dim());
    std::vector<ClassFunction> ext;
    for (int p = 0; p <= l; ++p) ext.push_back(exterior_power_character(lg, ctx, p));
    for (Mask T = 0; T <= lg.table().full_mask(); ++T) {
        ClassFunction chi = ribbon_character(ctx, 0, T);
        for (int p = 0; p <= l; ++p) {
            Cyclotomic ip = inner_product(chi, ext[static_cast<std::size_t>(p)]);
            Cyclotomic want(p == popcount(T) ? 1 : 0);
            if (ip != want) {
                std::ostringstream os;
                os << "T=" << T << " p=" << p << ": " << ip.to_string();
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

namespace {

bool relators_hold(const GroupTable& t, Mask K, const std::vector<QMatrix>& fwd, const std::vector<QMatrix>& bwd,
                   std::size_t dim) {
    const auto& pres = t.presentation();
    if (pres) {
        for (const auto& w : relators(*pres)) {
            bool inside = true;
            for (int letter : w) inside = inside && ((K >> (letter / 2)) & 1u);
            if (!inside) continue;
            QMatrix m = QMatrix::identity(dim);
            for (int letter : w) {
                auto i = static_cast<std::size_t>(letter / 2);
                m = m * (letter % 2 ? bwd[i] : fwd[i]);
            }
            if (m != QMatrix::identity(dim)) return false;
        }
        return true;
    }
    // No presentation: check the generator matrices define a homomorphism on
    // W_K, building matrices along a breadth-first search.
    Subgroup wk = standard_parabolic(t, K);
    std::vector<std::optional<QMatrix>> mat(t.order());
    std::vector<int> queue{0};
    mat[0] = QMatrix::identity(dim);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int g = queue[q];
        for (int i = 0; i < t.rank(); ++i) {
            if (!((K >> i) & 1u)) continue;
            int h = t.rmul(g, i);
            QMatrix m = *mat[static_cast<std::size_t>(g)] * fwd[static_cast<std::size_t>(i)];
            auto& slot = mat[static_cast<std::size_t>(h)];
            if (!slot) {
                slot = std::move(m);
                queue.push_back(h);
            } else if (*slot != m) {
                return false;
            }
        }
    }
    return queue.size() == wk.order();
}

}  // namespace

HomologyCharacter homology_character(const CosetComplex& full, Mask U, Mask T) {
    HomologyCharacter out;
    TablePtr table = full.table_ptr();
    const GroupTable& t = *table;
    Mask K = t.full_mask() & ~U;
    CosetComplex cx = U ? pointed(full, U, T) : type_select(full, T);
    ChainComplex cc = chain_complex(cx);
    out.homology = reduced_homology(cc);
    out.top_concentrated = top_concentrated(out.homology);
    if (!out.top_concentrated) return out;

    ContextPtr ctx = parabolic_context(table, K);
    TopCycleSpace top(cc);
    out.action.dim = top.dim();
    std::vector<QMatrix> bwd(static_cast<std::size_t>(t.rank()));
    out.action.generators.resize(static_cast<std::size_t>(t.rank()));
    for (int i = 0; i < t.rank(); ++i) {
        if (!((K >> i) & 1u)) continue;
        int g = t.generator(i);
        out.action.generators[static_cast<std::size_t>(i)] = top.action(coset_action(cx, g));
        bwd[static_cast<std::size_t>(i)] = top.action(coset_action(cx, t.inv(g)));
    }
    out.relations_hold = relators_hold(t, K, out.action.generators, bwd, top.dim());

    std::vector<Cyclotomic> v;
    for (int g : ctx->classes.reps) v.emplace_back(top.trace(coset_action(cx, g)));
    out.chi = ClassFunction(ctx, std::move(v));
    return out;
}

SuiteReport verify_homology_character(const CosetComplex& full, Mask U, Mask T) {
    SuiteReport rep;
    HomologyCharacter hc = homology_character(full, U, T);
    if (!hc.top_concentrated) {
        rep.fail("homology is not concentrated in the top degree");
        return rep;
    }
    if (!hc.relations_hold) rep.fail("top-cycle matrices violate the parabolic relations");
    ClassFunction want = ribbon_character(hc.chi->context(), U, T);
    for (std::size_t c = 0; c < want.values().size(); ++c)
        if (want.values()[c] != hc.chi->values()[c]) {
            std::ostringstream os;
            os << "class of element " << want.context()->classes.reps[c] << ": homology "
               << hc.chi->values()[c].to_string() << ", ribbon " << want.values()[c].to_string();
            rep.fail(os.str());
        }
    return rep;
}

}  // namespace reflecta
