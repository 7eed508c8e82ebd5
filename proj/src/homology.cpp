#include "reflecta/homology.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace reflecta {

ChainComplex chain_complex(const CosetComplex& cx) {
    ChainComplex cc;
    int top = cx.dim();
    if (top < -1) {
        cc.ranks = {0};
        cc.boundary.resize(1);
        return cc;
    }
    std::vector<std::vector<Face>> by_dim;
    std::vector<std::map<Face, int>> index;
    for (int d = -1; d <= top; ++d) {
        by_dim.push_back(cx.faces_of_dim(d));
        std::map<Face, int> ix;
        for (std::size_t k = 0; k < by_dim.back().size(); ++k) ix[by_dim.back()[k]] = static_cast<int>(k);
        index.push_back(std::move(ix));
        cc.ranks.push_back(by_dim.back().size());
    }
    cc.boundary.resize(cc.ranks.size());
    for (int d = 0; d <= top; ++d) {
        SparseIntMatrix& m = cc.boundary[static_cast<std::size_t>(d + 1)];
        m.rows = cc.rank(d - 1);
        m.cols = cc.rank(d);
        for (const Face& f : by_dim[static_cast<std::size_t>(d + 1)]) {
            std::vector<std::pair<int, long>> col;
            int pos = 0;
            for (int i = 0; i < cx.rank(); ++i) {
                Mask b = Mask{1} << i;
                if (!(f.type & b)) continue;
                Face sub = cx.subface(f, f.type & ~b);
                col.emplace_back(index[static_cast<std::size_t>(d)].at(sub), pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
            std::sort(col.begin(), col.end());
            m.columns.push_back(std::move(col));
        }
    }
    return cc;
}

ChainComplex chain_complex(const SimplicialComplex& sc) {
    ChainComplex cc;
    int top = sc.dim();
    if (top < -1) {
        cc.ranks = {0};
        cc.boundary.resize(1);
        return cc;
    }
    for (int d = -1; d <= top; ++d) cc.ranks.push_back(sc.faces(d).size());
    cc.boundary.resize(cc.ranks.size());
    for (int d = 0; d <= top; ++d) {
        SparseIntMatrix& m = cc.boundary[static_cast<std::size_t>(d + 1)];
        m.rows = cc.rank(d - 1);
        m.cols = cc.rank(d);
        for (const auto& f : sc.faces(d)) {
            std::vector<std::pair<int, long>> col;
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> sub = f;
                sub.erase(sub.begin() + static_cast<long>(i));
                col.emplace_back(sc.index_of(sub), i % 2 == 0 ? 1 : -1);
            }
            std::sort(col.begin(), col.end());
            m.columns.push_back(std::move(col));
        }
    }
    return cc;
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
    for (int d = 1; d <= cc.top(); ++d) {
        const auto& hi = cc.boundary[static_cast<std::size_t>(d + 1)];
        const auto& lo = cc.boundary[static_cast<std::size_t>(d)];
        for (const auto& col : hi.columns) {
            std::map<int, long> acc;
            for (auto [r, a] : col)
                for (auto [r2, b] : lo.columns[static_cast<std::size_t>(r)]) acc[r2] += a * b;
            for (auto [r, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

namespace {

void normalize_chain(std::vector<mpz_class>& d) {
    for (auto& x : d) x = abs(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                mpz_class g = gcd(d[i], d[j]);
                mpz_class l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
}

}  // namespace

std::vector<mpz_class> smith_normal_form(const std::vector<std::vector<mpz_class>>& dense) {
    std::vector<std::vector<mpz_class>> a = dense;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
        }
        diag.push_back(a[t][t]);
        ++t;
    }
    normalize_chain(diag);
    return diag;
}

std::vector<mpz_class> smith_normal_form(const SparseIntMatrix& m) {
    // unit-pivot elimination on columns, then dense elimination of the rest
    using Entry = std::pair<int, long>;
    std::vector<std::vector<Entry>> vecs = m.columns;
    std::vector<char> alive(vecs.size(), 1);
    std::vector<std::vector<int>> holders(m.rows);
    for (std::size_t v = 0; v < vecs.size(); ++v)
        for (auto [r, x] : vecs[v]) holders[static_cast<std::size_t>(r)].push_back(static_cast<int>(v));
    std::size_t units = 0;
    bool overflow = false;
    bool progress = true;
    while (progress && !overflow) {
        progress = false;
        for (std::size_t v = 0; v < vecs.size() && !overflow; ++v) {
            if (!alive[v]) continue;
            int prow = -1;
            long pval = 0;
            std::size_t best = SIZE_MAX;
            for (auto [r, x] : vecs[v])
                if ((x == 1 || x == -1) && holders[static_cast<std::size_t>(r)].size() < best) {
                    prow = r;
                    pval = x;
                    best = holders[static_cast<std::size_t>(r)].size();
                }
            if (prow < 0) continue;
            std::vector<int> hold = holders[static_cast<std::size_t>(prow)];
            for (int w : hold) {
                if (w == static_cast<int>(v) || !alive[static_cast<std::size_t>(w)]) continue;
                auto& wv = vecs[static_cast<std::size_t>(w)];
                auto it = std::lower_bound(wv.begin(), wv.end(), Entry{prow, LONG_MIN});
                if (it == wv.end() || it->first != prow) continue;
                long f = it->second * pval;
                std::vector<Entry> merged;
                merged.reserve(wv.size() + vecs[v].size());
                std::size_t a = 0, b = 0;
                const auto& pv = vecs[v];
                while (a < wv.size() || b < pv.size()) {
                    if (b == pv.size() || (a < wv.size() && wv[a].first < pv[b].first)) {
                        merged.push_back(wv[a++]);
                    } else if (a == wv.size() || pv[b].first < wv[a].first) {
                        __int128 val = -static_cast<__int128>(f) * pv[b].second;
                        if (val > (__int128{1} << 62) || val < -(__int128{1} << 62)) overflow = true;
                        merged.emplace_back(pv[b].first, static_cast<long>(val));
                        holders[static_cast<std::size_t>(pv[b].first)].push_back(w);
                        ++b;
                    } else {
                        __int128 val = static_cast<__int128>(wv[a].second) - static_cast<__int128>(f) * pv[b].second;
                        if (val > (__int128{1} << 62) || val < -(__int128{1} << 62)) overflow = true;
                        if (val != 0) merged.emplace_back(wv[a].first, static_cast<long>(val));
                        ++a;
                        ++b;
                    }
                }
                wv = std::move(merged);
            }
            alive[v] = 0;
            holders[static_cast<std::size_t>(prow)].clear();
            ++units;
            progress = true;
        }
    }
    if (overflow) {
        std::vector<std::vector<mpz_class>> dense(m.rows, std::vector<mpz_class>(m.cols, 0));
        for (std::size_t j = 0; j < m.cols; ++j)
            for (auto [r, x] : m.columns[j]) dense[static_cast<std::size_t>(r)][j] = x;
        return smith_normal_form(dense);
    }
    std::map<int, std::size_t> row_id;
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < vecs.size(); ++v) {
        if (!alive[v] || vecs[v].empty()) continue;
        rest.push_back(v);
        for (auto [r, x] : vecs[v]) row_id.emplace(r, row_id.size());
    }
    std::vector<std::vector<mpz_class>> dense(row_id.size(), std::vector<mpz_class>(rest.size(), 0));
    for (std::size_t j = 0; j < rest.size(); ++j)
        for (auto [r, x] : vecs[rest[j]]) dense[row_id[r]][j] = x;
    std::vector<mpz_class> d = smith_normal_form(dense);
    std::vector<mpz_class> out(units, 1);
    out.insert(out.end(), d.begin(), d.end());
    normalize_chain(out);
    return out;
}

std::vector<HomologyGroup> reduced_homology(const ChainComplex& cc) {
    int top = cc.top();
    std::vector<std::vector<mpz_class>> snf(cc.boundary.size());
    for (int d = 0; d <= top; ++d) snf[static_cast<std::size_t>(d + 1)] = smith_normal_form(cc.boundary[static_cast<std::size_t>(d + 1)]);
    std::vector<HomologyGroup> h;
    for (int d = -1; d <= top; ++d) {
        HomologyGroup g;
        std::size_t rank_out = d >= 0 ? snf[static_cast<std::size_t>(d + 1)].size() : 0;
        std::size_t rank_in = d < top ? snf[static_cast<std::size_t>(d + 2)].size() : 0;
        g.betti = cc.rank(d) - rank_out - rank_in;
        if (d < top)
            for (const auto& x : snf[static_cast<std::size_t>(d + 2)])
                if (x > 1) g.torsion.push_back(x);
        h.push_back(std::move(g));
    }
    return h;
}

std::vector<std::size_t> betti_numbers(const std::vector<HomologyGroup>& h) {
    std::vector<std::size_t> b;
    for (std::size_t k = 1; k < h.size(); ++k) b.push_back(h[k].betti);
    return b;
}

bool top_concentrated(const std::vector<HomologyGroup>& h) {
    for (std::size_t k = 0; k + 1 < h.size(); ++k)
        if (!h[k].is_zero()) return false;
    return true;
}

SignedPermutation coset_action(const CosetComplex& cx, int g) {
    auto top = cx.faces_of_dim(cx.dim());
    std::map<Face, int> ix;
    for (std::size_t k = 0; k < top.size(); ++k) ix[top[k]] = static_cast<int>(k);
    SignedPermutation p;
    for (const auto& f : top) {
        auto it = ix.find(cx.act(g, f));
        if (it == ix.end()) throw std::invalid_argument("coset_action: element does not preserve the complex");
        p.emplace_back(it->second, 1);
    }
    return p;
}

SignedPermutation simplicial_action(const SimplicialComplex& sc, const std::vector<int>& vertex_image) {
    SignedPermutation p;
    for (const auto& f : sc.faces(sc.dim())) {
        std::vector<int> img;
        for (int v : f) img.push_back(vertex_image[static_cast<std::size_t>(v)]);
        int sign = 1;
        for (std::size_t i = 0; i < img.size(); ++i)
            for (std::size_t j = i + 1; j < img.size(); ++j)
                if (img[i] > img[j]) sign = -sign;
        std::sort(img.begin(), img.end());
        int k = sc.index_of(img);
        if (k < 0) throw std::invalid_argument("simplicial_action: map does not preserve the complex");
        p.emplace_back(k, sign);
    }
    return p;
}

TopCycleSpace::TopCycleSpace(const ChainComplex& cc) {
    int top = cc.top();
    if (top < -1) return;
    std::size_t n = cc.rank(top);
    if (top == -1) {
        // C_{-1} has no boundary: every chain is a cycle
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<mpq_class> v(n, 0);
            v[k] = 1;
            basis_.push_back(v);
            free_.push_back(k);
        }
        return;
    }
    const SparseIntMatrix& d = cc.boundary[static_cast<std::size_t>(top + 1)];
    QMatrix m(d.rows, d.cols);
    for (std::size_t j = 0; j < d.cols; ++j)
        for (auto [r, x] : d.columns[j]) m(static_cast<std::size_t>(r), j) = x;
    std::vector<std::size_t> piv = m.rref_in_place();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<mpq_class> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
        basis_.push_back(std::move(v));
        free_.push_back(f);
    }
}

QMatrix TopCycleSpace::action(const SignedPermutation& p) const {
    std::size_t k = dim();
    std::vector<long> where(p.size(), -1);  // inverse image position of each free column
    std::vector<int> sign_at(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        where[static_cast<std::size_t>(p[i].first)] = static_cast<long>(i);
        sign_at[static_cast<std::size_t>(p[i].first)] = p[i].second;
    }
    QMatrix a(k, k);
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t row = 0; row < k; ++row) {
            std::size_t target = free_[row];
            long src = where[target];
            a(row, col) = basis_[col][static_cast<std::size_t>(src)] * sign_at[target];
        }
    return a;
}

mpq_class TopCycleSpace::trace(const SignedPermutation& p) const { return action(p).trace(); }

}  // namespace reflecta
