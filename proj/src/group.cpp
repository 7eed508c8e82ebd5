#include "reflecta/group.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>

namespace reflecta {

namespace {

constexpr std::size_t kFullTableLimit = 2048;

// Coset enumeration over the trivial subgroup. Columns are 2i (r_i) and
// 2i+1 (r_i^{-1}); cosets are processed strictly in order (HLT) with a
// lookahead pass and compaction when the table fills up.
class ToddCoxeter {
public:
    ToddCoxeter(int rank, std::vector<std::vector<int>> rels, std::size_t limit)
        : cols_(2 * rank), rels_(std::move(rels)), limit_(limit) {
        new_row();
        room_ = static_cast<std::size_t>(cols_);
        for (const auto& r : rels_) room_ += r.size();
    }

    // Returns the completed table restricted to live cosets, renumbered so
    // that coset 0 is the trivial coset.
    std::vector<int> run() {
        std::size_t alpha = 0;
        while (alpha < rows_) {
            if (rows_ + room_ > limit_) {
                lookahead();
                alpha = compact(alpha);
                if (rows_ + room_ > limit_) throw BudgetExceeded("coset enumeration exceeded its table budget");
                continue;
            }
            if (alive(alpha)) {
                for (const auto& w : rels_) {
                    if (!alive(alpha)) break;
                    scan_and_fill(static_cast<int>(alpha), w);
                }
                if (alive(alpha))
                    for (int x = 0; x < cols_; ++x)
                        if (at(alpha, x) < 0) define(static_cast<int>(alpha), x);
            }
            ++alpha;
        }
        compact(0);
        return table_;
    }

    std::size_t rows() const { return rows_; }

private:
    bool alive(std::size_t a) const { return p_[a] == static_cast<int>(a); }
    int& at(std::size_t a, int x) { return table_[a * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }

    void new_row() {
        table_.insert(table_.end(), static_cast<std::size_t>(cols_), -1);
        p_.push_back(static_cast<int>(rows_));
        ++rows_;
    }

    int define(int a, int x) {
        int b = static_cast<int>(rows_);
        new_row();
        at(static_cast<std::size_t>(a), x) = b;
        at(static_cast<std::size_t>(b), x ^ 1) = a;
        return b;
    }

    int rep(int k) {
        int r = k;
        while (p_[static_cast<std::size_t>(r)] != r) r = p_[static_cast<std::size_t>(r)];
        while (p_[static_cast<std::size_t>(k)] != r) {
            int nx = p_[static_cast<std::size_t>(k)];
            p_[static_cast<std::size_t>(k)] = r;
            k = nx;
        }
        return r;
    }

    void merge(int k, int l, std::vector<int>& q) {
        int a = rep(k), b = rep(l);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[static_cast<std::size_t>(b)] = a;
        q.push_back(b);
    }

    void coincidence(int a, int b) {
        std::vector<int> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            int g = q[i];
            for (int x = 0; x < cols_; ++x) {
                int d = at(static_cast<std::size_t>(g), x);
                if (d < 0) continue;
                at(static_cast<std::size_t>(d), x ^ 1) = -1;
                int mu = rep(g), nu = rep(d);
                if (at(static_cast<std::size_t>(mu), x) >= 0) {
                    merge(nu, at(static_cast<std::size_t>(mu), x), q);
                } else if (at(static_cast<std::size_t>(nu), x ^ 1) >= 0) {
                    merge(mu, at(static_cast<std::size_t>(nu), x ^ 1), q);
                } else {
                    at(static_cast<std::size_t>(mu), x) = nu;
                    at(static_cast<std::size_t>(nu), x ^ 1) = mu;
                }
            }
        }
    }

    // Scans the relator at coset a; with fill, defines cosets to close the cycle.
    void scan(int a, const std::vector<int>& w, bool fill) {
        int f = a, b = a;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) >= 0) {
                f = at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
                b = at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(j)] ^ 1);
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(static_cast<std::size_t>(f), w[static_cast<std::size_t>(i)]) = b;
                at(static_cast<std::size_t>(b), w[static_cast<std::size_t>(i)] ^ 1) = f;
                return;
            }
            if (!fill) return;
            define(f, w[static_cast<std::size_t>(i)]);
        }
    }

    void scan_and_fill(int a, const std::vector<int>& w) { scan(a, w, true); }

    void lookahead() {
        for (std::size_t b = 0; b < rows_; ++b)
            for (const auto& w : rels_) {
                if (!alive(b)) break;
                scan(static_cast<int>(b), w, false);
            }
    }

    // Drops dead cosets; returns the new position of the first live coset >= alpha.
    std::size_t compact(std::size_t alpha) {
        std::vector<int> newid(rows_, -1);
        std::size_t live = 0, new_alpha = 0;
        bool alpha_set = false;
        for (std::size_t a = 0; a < rows_; ++a) {
            if (!alpha_set && a >= alpha) {
                new_alpha = live;
                alpha_set = true;
            }
            if (alive(a)) newid[a] = static_cast<int>(live++);
        }
        if (!alpha_set) new_alpha = live;
        std::vector<int> t(live * static_cast<std::size_t>(cols_), -1);
        for (std::size_t a = 0; a < rows_; ++a) {
            if (newid[a] < 0) continue;
            for (int x = 0; x < cols_; ++x) {
                int d = at(a, x);
                t[static_cast<std::size_t>(newid[a]) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)] =
                    d < 0 ? -1 : newid[static_cast<std::size_t>(rep(d))];
            }
        }
        table_ = std::move(t);
        rows_ = live;
        p_.resize(live);
        std::iota(p_.begin(), p_.end(), 0);
        return new_alpha;
    }

    int cols_;
    std::vector<std::vector<int>> rels_;
    std::size_t limit_;
    std::size_t room_ = 0;
    std::size_t rows_ = 0;
    std::vector<int> table_;
    std::vector<int> p_;
};

template <class T>
void write_pod(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
T read_pod(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("group cache: truncated blob");
    return v;
}

constexpr std::uint32_t kBlobMagic = 0x52464c54;  // "RFLT"
constexpr std::uint32_t kBlobVersion = 1;

}  // namespace

GroupTable GroupTable::enumerate(const GroupPresentation& pres, std::size_t budget) {
    pres.validate();
    std::size_t limit = std::max<std::size_t>(8 * budget, 4096);
    ToddCoxeter tc(pres.rank, relators(pres), limit);
    std::vector<int> table = tc.run();
    std::size_t n = tc.rows();
    if (n > budget) throw BudgetExceeded("group order exceeds the element budget");
    int cols = 2 * pres.rank;
    // Renumber by breadth-first search over generator columns.
    std::vector<int> order_of(n, -1);
    std::vector<int> bfs;
    bfs.push_back(0);
    order_of[0] = 0;
    for (std::size_t k = 0; k < bfs.size(); ++k) {
        int c = bfs[k];
        for (int i = 0; i < pres.rank; ++i) {
            int d = table[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(2 * i)];
            if (order_of[static_cast<std::size_t>(d)] < 0) {
                order_of[static_cast<std::size_t>(d)] = static_cast<int>(bfs.size());
                bfs.push_back(d);
            }
        }
    }
    if (bfs.size() != n) throw std::logic_error("coset enumeration produced a disconnected table");
    GroupTable t;
    t.n_ = n;
    t.rank_ = pres.rank;
    t.label_ = pres.label;
    t.pres_ = pres;
    t.right_.assign(n * static_cast<std::size_t>(pres.rank), -1);
    for (std::size_t c = 0; c < n; ++c)
        for (int i = 0; i < pres.rank; ++i)
            t.right_[static_cast<std::size_t>(order_of[c]) * static_cast<std::size_t>(pres.rank) + static_cast<std::size_t>(i)] =
                order_of[static_cast<std::size_t>(
                    table[c * static_cast<std::size_t>(cols) + static_cast<std::size_t>(2 * i)])];
    t.finalize_from_right_table();
    if (n == 1) throw PresentationCollapse("presentation " + pres.label + " collapses to the trivial group");
    for (int i = 0; i < pres.rank; ++i) {
        if (t.generator_order(i) != pres.orders[static_cast<std::size_t>(i)])
            throw PresentationCollapse("presentation " + pres.label + " collapses: generator " + std::to_string(i + 1) +
                                       " has order " + std::to_string(t.generator_order(i)));
        for (int j = 0; j < i; ++j)
            if (t.generator(i) == t.generator(j))
                throw PresentationCollapse("presentation " + pres.label + " identifies two generators");
    }
    return t;
}

GroupTable GroupTable::from_permutations(const std::vector<std::vector<int>>& gens, const std::string& label,
                                         std::size_t budget) {
    if (gens.empty()) throw std::invalid_argument("permutation group needs at least one generator");
    std::size_t m = gens[0].size();
    for (const auto& g : gens) {
        std::vector<int> s = g;
        std::sort(s.begin(), s.end());
        for (std::size_t k = 0; k < m; ++k)
            if (g.size() != m || s[k] != static_cast<int>(k)) throw std::invalid_argument("not a permutation");
    }
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    GroupTable t;
    t.rank_ = static_cast<int>(gens.size());
    t.label_ = label;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& s : gens) {
            std::vector<int> prod(m);
            for (std::size_t x = 0; x < m; ++x) prod[x] = elems[k][static_cast<std::size_t>(s[x])];
            auto it = index.find(prod);
            int id2;
            if (it == index.end()) {
                if (elems.size() >= budget) throw BudgetExceeded("permutation group exceeds the element budget");
                id2 = static_cast<int>(elems.size());
                index.emplace(prod, id2);
                elems.push_back(std::move(prod));
            } else {
                id2 = it->second;
            }
            t.right_.push_back(id2);
        }
    }
    t.n_ = elems.size();
    t.perms_ = std::move(elems);
    t.finalize_from_right_table();
    return t;
}

void GroupTable::finalize_from_right_table() {
    std::size_t r = static_cast<std::size_t>(rank_);
    parent_.assign(n_, -1);
    last_gen_.assign(n_, -1);
    words_.assign(n_, {});
    std::vector<bool> seen(n_, false);
    seen[0] = true;
    std::vector<int> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int g = queue[k];
        for (int i = 0; i < rank_; ++i) {
            int h = rmul(g, i);
            if (seen[static_cast<std::size_t>(h)]) continue;
            seen[static_cast<std::size_t>(h)] = true;
            parent_[static_cast<std::size_t>(h)] = g;
            last_gen_[static_cast<std::size_t>(h)] = i;
            words_[static_cast<std::size_t>(h)] = words_[static_cast<std::size_t>(g)];
            words_[static_cast<std::size_t>(h)].push_back(i);
            queue.push_back(h);
        }
    }
    for (std::size_t k = 0; k < n_; ++k)
        if (queue[k] != static_cast<int>(k)) throw std::logic_error("group table is not in breadth-first order");

    gen_order_.assign(r, 0);
    for (int i = 0; i < rank_; ++i) {
        int g = rmul(0, i), k = 1;
        while (g != 0) {
            g = rmul(g, i);
            ++k;
        }
        gen_order_[static_cast<std::size_t>(i)] = k;
    }

    full_.clear();
    if (n_ <= kFullTableLimit) {
        full_.assign(n_ * n_, -1);
        for (std::size_t g = 0; g < n_; ++g) {
            full_[g * n_] = static_cast<int>(g);
            for (std::size_t h = 1; h < n_; ++h)
                full_[g * n_ + h] = rmul(full_[g * n_ + static_cast<std::size_t>(parent_[h])], last_gen_[h]);
        }
    }

    inv_.assign(n_, -1);
    if (!full_.empty()) {
        for (std::size_t g = 0; g < n_; ++g)
            for (std::size_t h = 0; h < n_; ++h)
                if (full_[g * n_ + h] == 0) {
                    inv_[g] = static_cast<int>(h);
                    break;
                }
    } else {
        for (std::size_t g = 0; g < n_; ++g) {
            int x = 0;
            const auto& w = words_[g];
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                for (int k = 1; k < gen_order_[static_cast<std::size_t>(*it)]; ++k) x = rmul(x, *it);
            inv_[g] = x;
        }
    }

    left_.assign(n_ * r, -1);
    for (std::size_t g = 0; g < n_; ++g)
        for (int i = 0; i < rank_; ++i) {
            // r_i g = (g^{-1} r_i^{-1})^{-1}
            int x = inv_[g];
            for (int k = 1; k < gen_order_[static_cast<std::size_t>(i)]; ++k) x = rmul(x, i);
            left_[g * r + static_cast<std::size_t>(i)] = inv_[static_cast<std::size_t>(x)];
        }
}

int GroupTable::mul(int g, int h) const {
    if (!full_.empty()) return full_[static_cast<std::size_t>(g) * n_ + static_cast<std::size_t>(h)];
    for (int i : words_[static_cast<std::size_t>(h)]) g = rmul(g, i);
    return g;
}

int GroupTable::pow(int g, long k) const {
    int o = element_order(g);
    k %= o;
    if (k < 0) k += o;
    int x = 0;
    for (long t = 0; t < k; ++t) x = mul(x, g);
    return x;
}

int GroupTable::element_order(int g) const {
    int x = g, k = 1;
    while (x != 0) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

int GroupTable::exponent() const {
    ConjugacyClasses cl = conjugacy_classes(*this);
    long e = 1;
    for (int r : cl.reps) e = std::lcm(e, static_cast<long>(element_order(r)));
    return static_cast<int>(e);
}

int GroupTable::from_word(const std::vector<int>& w) const {
    int g = 0;
    for (int i : w) g = rmul(g, i);
    return g;
}

bool GroupTable::verify_relators() const {
    if (!pres_) return true;
    for (const auto& rel : relators(*pres_))
        for (std::size_t g = 0; g < n_; ++g) {
            int x = static_cast<int>(g);
            for (int letter : rel) {
                int i = letter / 2;
                int reps = (letter % 2 == 0) ? 1 : gen_order_[static_cast<std::size_t>(i)] - 1;
                for (int k = 0; k < reps; ++k) x = rmul(x, i);
            }
            if (x != static_cast<int>(g)) return false;
        }
    return true;
}

void GroupTable::save(std::ostream& out) const {
    write_pod(out, kBlobMagic);
    write_pod(out, kBlobVersion);
    std::uint32_t len = static_cast<std::uint32_t>(label_.size());
    write_pod(out, len);
    out.write(label_.data(), len);
    write_pod(out, static_cast<std::int32_t>(rank_));
    write_pod(out, static_cast<std::uint8_t>(pres_ ? 1 : 0));
    if (pres_) {
        for (int p : pres_->orders) write_pod(out, static_cast<std::int32_t>(p));
        for (const auto& row : pres_->braid)
            for (int q : row) write_pod(out, static_cast<std::int32_t>(q));
    }
    write_pod(out, static_cast<std::uint64_t>(n_));
    for (int v : right_) write_pod(out, static_cast<std::int32_t>(v));
    write_pod(out, static_cast<std::uint64_t>(perms_.empty() ? 0 : perms_[0].size()));
    for (const auto& p : perms_)
        for (int v : p) write_pod(out, static_cast<std::int32_t>(v));
}

GroupTable GroupTable::load(std::istream& in) {
    if (read_pod<std::uint32_t>(in) != kBlobMagic) throw std::runtime_error("group cache: bad magic");
    if (read_pod<std::uint32_t>(in) != kBlobVersion) throw std::runtime_error("group cache: unsupported version");
    GroupTable t;
    std::uint32_t len = read_pod<std::uint32_t>(in);
    t.label_.resize(len);
    in.read(t.label_.data(), len);
    t.rank_ = read_pod<std::int32_t>(in);
    if (read_pod<std::uint8_t>(in) != 0) {
        GroupPresentation p;
        p.rank = t.rank_;
        p.label = t.label_;
        for (int i = 0; i < t.rank_; ++i) p.orders.push_back(read_pod<std::int32_t>(in));
        p.braid.assign(static_cast<std::size_t>(t.rank_), std::vector<int>(static_cast<std::size_t>(t.rank_)));
        for (auto& row : p.braid)
            for (auto& q : row) q = read_pod<std::int32_t>(in);
        t.pres_ = p;
    }
    t.n_ = read_pod<std::uint64_t>(in);
    t.right_.resize(t.n_ * static_cast<std::size_t>(t.rank_));
    for (auto& v : t.right_) {
        v = read_pod<std::int32_t>(in);
        if (v < 0 || static_cast<std::size_t>(v) >= t.n_) throw std::runtime_error("group cache: corrupt table");
    }
    std::size_t pts = read_pod<std::uint64_t>(in);
    if (pts > 0) {
        t.perms_.assign(t.n_, std::vector<int>(pts));
        for (auto& p : t.perms_)
            for (auto& v : p) v = read_pod<std::int32_t>(in);
    }
    t.finalize_from_right_table();
    if (!t.verify_relators()) throw std::runtime_error("group cache: relators fail");
    return t;
}

Subgroup::Subgroup(std::size_t group_order, std::vector<int> members, std::vector<int> generators)
    : members_(std::move(members)), gens_(std::move(generators)), bits_((group_order + 63) / 64, 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    hash_ = members_.size();
    for (int g : members_) {
        bits_[static_cast<std::size_t>(g) >> 6] |= std::uint64_t{1} << (g & 63);
        hash_ = hash_ * 1000003u ^ static_cast<std::size_t>(g);
    }
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
    if (members_.size() > o.members_.size()) return false;
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if ((bits_[k] & ~o.bits_[k]) != 0) return false;
    return true;
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
    std::vector<int> m;
    for (int g : members_)
        if (o.contains(g)) m.push_back(g);
    return Subgroup(bits_.size() * 64, std::move(m), {});
}

Subgroup whole_group(const GroupTable& t) {
    std::vector<int> all(t.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> gens;
    for (int i = 0; i < t.rank(); ++i) gens.push_back(t.generator(i));
    return Subgroup(t.order(), std::move(all), std::move(gens));
}

Subgroup generated_subgroup(const GroupTable& t, const std::vector<int>& gens) {
    std::vector<bool> seen(t.order(), false);
    std::vector<int> members{0};
    seen[0] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
        for (int s : gens) {
            int h = t.mul(members[k], s);
            if (!seen[static_cast<std::size_t>(h)]) {
                seen[static_cast<std::size_t>(h)] = true;
                members.push_back(h);
            }
        }
    return Subgroup(t.order(), std::move(members), gens);
}

Subgroup standard_parabolic(const GroupTable& t, Mask J) {
    std::vector<bool> seen(t.order(), false);
    std::vector<int> members{0};
    seen[0] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
        for (int i = 0; i < t.rank(); ++i) {
            if (!((J >> i) & 1u)) continue;
            int h = t.rmul(members[k], i);
            if (!seen[static_cast<std::size_t>(h)]) {
                seen[static_cast<std::size_t>(h)] = true;
                members.push_back(h);
            }
        }
    std::vector<int> gens;
    for (int i = 0; i < t.rank(); ++i)
        if ((J >> i) & 1u) gens.push_back(t.generator(i));
    return Subgroup(t.order(), std::move(members), std::move(gens));
}

Subgroup conjugate_subgroup(const GroupTable& t, const Subgroup& h, int g) {
    std::vector<int> m, gens;
    m.reserve(h.order());
    for (int x : h.members()) m.push_back(t.conj(g, x));
    for (int x : h.generators()) gens.push_back(t.conj(g, x));
    return Subgroup(t.order(), std::move(m), std::move(gens));
}

CosetPartition cosets_within(const GroupTable& t, const Subgroup& g, const Subgroup& h) {
    CosetPartition cp;
    cp.coset_of.assign(t.order(), -1);
    for (int x : g.members()) {
        if (cp.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(cp.cosets.size());
        std::vector<int> c;
        c.reserve(h.order());
        for (int y : h.members()) {
            int z = t.mul(x, y);
            cp.coset_of[static_cast<std::size_t>(z)] = id;
            c.push_back(z);
        }
        std::sort(c.begin(), c.end());
        cp.cosets.push_back(std::move(c));
    }
    return cp;
}

CosetPartition cosets(const GroupTable& t, const Subgroup& h) { return cosets_within(t, whole_group(t), h); }

CosetPartition parabolic_cosets(const GroupTable& t, Mask K) {
    CosetPartition cp;
    cp.coset_of.assign(t.order(), -1);
    for (std::size_t x = 0; x < t.order(); ++x) {
        if (cp.coset_of[x] >= 0) continue;
        int id = static_cast<int>(cp.cosets.size());
        std::vector<int> c{static_cast<int>(x)};
        cp.coset_of[x] = id;
        for (std::size_t k = 0; k < c.size(); ++k)
            for (int i = 0; i < t.rank(); ++i) {
                if (!((K >> i) & 1u)) continue;
                int z = t.rmul(c[k], i);
                if (cp.coset_of[static_cast<std::size_t>(z)] < 0) {
                    cp.coset_of[static_cast<std::size_t>(z)] = id;
                    c.push_back(z);
                }
            }
        std::sort(c.begin(), c.end());
        cp.cosets.push_back(std::move(c));
    }
    return cp;
}

namespace {

template <class ConjFn>
ConjugacyClasses classes_by_orbits(const GroupTable& t, const std::vector<int>& members, std::size_t ngens,
                                   ConjFn conj_by) {
    ConjugacyClasses cc;
    cc.group_order = members.size();
    cc.class_of.assign(t.order(), -1);
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    for (int x : sorted) {
        if (cc.class_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(cc.reps.size());
        cc.reps.push_back(x);
        std::vector<int> orbit{x};
        cc.class_of[static_cast<std::size_t>(x)] = id;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (std::size_t s = 0; s < ngens; ++s) {
                int y = conj_by(s, orbit[k]);
                if (cc.class_of[static_cast<std::size_t>(y)] < 0) {
                    cc.class_of[static_cast<std::size_t>(y)] = id;
                    orbit.push_back(y);
                }
            }
        cc.sizes.push_back(orbit.size());
    }
    return cc;
}

}  // namespace

ConjugacyClasses conjugacy_classes(const GroupTable& t) {
    std::vector<int> all(t.order());
    std::iota(all.begin(), all.end(), 0);
    return classes_by_orbits(t, all, static_cast<std::size_t>(t.rank()), [&t](std::size_t s, int x) {
        int i = static_cast<int>(s);
        int y = x;
        for (int k = 1; k < t.generator_order(i); ++k) y = t.rmul(y, i);
        return t.lmul(i, y);  // r_i x r_i^{-1}
    });
}

ConjugacyClasses conjugacy_classes(const GroupTable& t, const Subgroup& h) {
    const std::vector<int>& gens = h.generators();
    std::vector<int> invs;
    for (int s : gens) invs.push_back(t.inv(s));
    return classes_by_orbits(t, h.members(), gens.size(), [&](std::size_t s, int x) {
        return t.mul(t.mul(gens[s], x), invs[s]);
    });
}

bool IntersectionReport::all() const {
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

IntersectionReport intersection_condition(const GroupTable& t) {
    int l = t.rank();
    Mask full = t.full_mask();
    std::vector<Subgroup> maximal;
    for (int i = 0; i < l; ++i) maximal.push_back(standard_parabolic(t, full & ~(Mask{1} << i)));
    IntersectionReport rep;
    for (Mask J = 0; J <= full; ++J) {
        Subgroup inter = whole_group(t);
        for (int i = 0; i < l; ++i)
            if (!((J >> i) & 1u)) inter = inter.intersect(maximal[static_cast<std::size_t>(i)]);
        Subgroup wj = standard_parabolic(t, J);
        rep.holds.push_back(inter.members() == wj.members());
    }
    return rep;
}

}  // namespace reflecta
