/*
   Copyright 2026 The realmoduli authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "charformula.hpp"
#include "rational.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <vector>

namespace realmoduli::oracle {

/* The two graded algebras computed from scratch as quotients of an exterior
   algebra on tuple generators:
     - LambdaPrime(S): generators nu_T for 3-subsets T of S, relations
       nu_{ijk} nu_{ijl} = 0 and the cyclic five-term quadratic relation;
     - Lambda(S): generators omega_T for 4-subsets of S, relations
       omega_{ijkl} omega_{ijkm} = 0 and the cyclic five-term *linear*
       relation.
   Generators are odd (degree 1), so ambient monomials are squarefree. */
enum class AlgebraKind { LambdaPrime, Lambda };

inline int generator_arity(AlgebraKind kind) { return kind == AlgebraKind::LambdaPrime ? 3 : 4; }
inline std::string kind_name(AlgebraKind kind) {
    return kind == AlgebraKind::LambdaPrime ? "lambda-prime" : "lambda";
}

/* Sort a small index tuple in place, returning the sign of the sorting
   permutation, or 0 if two entries coincide. */
inline int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i) {
        for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    return sign;
}

/* Generators of the algebra on the ground set {0..m-1}: all ascending
   arity-subsets in lexicographic order. */
class GeneratorSet {
public:
    GeneratorSet(int m, int arity) : m_(m), arity_(arity) {
        std::vector<int> cur(arity);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == arity) {
                tuples_.push_back(cur);
                return;
            }
            for (int v = lo; v < m_; ++v) {
                cur[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        if (arity <= m) rec(rec, 0, 0);
        for (size_t i = 0; i < tuples_.size(); ++i) rank_[tuples_[i]] = static_cast<int>(i);
    }

    int count() const { return static_cast<int>(tuples_.size()); }
    const std::vector<int>& tuple(int id) const { return tuples_[id]; }

    /* id and sign of a possibly unsorted tuple; {-1, 0} when degenerate */
    std::pair<int, int> canonical(std::vector<int> idx) const {
        int sign = sort_with_sign(idx);
        if (sign == 0) return {-1, 0};
        auto it = rank_.find(idx);
        if (it == rank_.end()) throw std::invalid_argument("GeneratorSet: index out of range");
        return {it->second, sign};
    }

private:
    int m_, arity_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> rank_;
};

/* Monomials of a fixed degree d: ascending d-subsets of generator ids,
   ordered and ranked lexicographically.  This ordering is the pivot order
   of the elimination below. */
class MonomialBasis {
public:
    MonomialBasis(int num_generators, int degree) : g_(num_generators), d_(degree) {
        choose_.assign(g_ + 1, std::vector<long long>(d_ + 1, 0));
        for (int n = 0; n <= g_; ++n) {
            choose_[n][0] = 1;
            for (int k = 1; k <= d_ && k <= n; ++k)
                choose_[n][k] = choose_[n - 1][k - 1] + (n - 1 >= k ? choose_[n - 1][k] : 0);
        }
        count_ = (d_ <= g_) ? choose_[g_][d_] : 0;
    }

    long long count() const { return count_; }

    /* lexicographic rank of an ascending id tuple */
    long long rank(const std::vector<int>& mono) const {
        long long r = 0;
        int prev = -1;
        for (int i = 0; i < d_; ++i) {
            for (int v = prev + 1; v < mono[i]; ++v) r += choose_[g_ - 1 - v][d_ - 1 - i];
            prev = mono[i];
        }
        return r;
    }

    std::vector<int> unrank(long long r) const {
        std::vector<int> mono(d_);
        int v = 0;
        for (int i = 0; i < d_; ++i) {
            while (true) {
                long long block = choose_[g_ - 1 - v][d_ - 1 - i];
                if (r < block) break;
                r -= block;
                ++v;
            }
            mono[i] = v++;
        }
        return mono;
    }

private:
    int g_, d_;
    long long count_;
    std::vector<std::vector<long long>> choose_;
};

/* A relation, stored as signed integer combination of monomials in
   generator ids (each term's ids ascending). */
struct Relation {
    int degree = 0;
    std::vector<std::pair<std::vector<int>, BigInt>> terms;
};

namespace detail {

/* Canonicalize a list of (tuple, coeff) into a Relation, combining equal
   monomials; returns an empty relation when everything cancels. */
inline Relation make_relation(int degree,
                              const std::vector<std::pair<std::vector<std::vector<int>>, BigInt>>& raw,
                              const GeneratorSet& gens) {
    std::map<std::vector<int>, BigInt> acc;
    for (const auto& [tuples, coeff] : raw) {
        int sign = 1;
        std::vector<int> ids;
        ids.reserve(tuples.size());
        for (const auto& t : tuples) {
            auto [id, s] = gens.canonical(t);
            if (s == 0) {
                sign = 0;
                break;
            }
            sign *= s;
            ids.push_back(id);
        }
        if (sign == 0) continue;
        int order_sign = sort_with_sign(ids);
        if (order_sign == 0) continue;  // repeated generator: term vanishes
        BigInt c = coeff * sign * order_sign;
        auto it = acc.find(ids);
        if (it == acc.end())
            acc.emplace(std::move(ids), c);
        else {
            it->second += c;
            if (it->second == 0) acc.erase(it);
        }
    }
    Relation rel;
    rel.degree = degree;
    for (auto& [ids, c] : acc) rel.terms.emplace_back(ids, c);
    return rel;
}

}  // namespace detail

/* Defining relations on the ground set {0..m-1}, enumerated redundantly
   over ordered index tuples and deduplicated up to scale. */
inline std::vector<Relation> relations(AlgebraKind kind, int m, const GeneratorSet& gens) {
    std::set<std::vector<std::pair<std::vector<int>, BigInt>>> seen;
    std::vector<Relation> out;
    auto push = [&](Relation rel) {
        if (rel.terms.empty()) return;
        // normalize: content one, leading coefficient positive
        BigInt content = 0;
        for (const auto& [ids, c] : rel.terms) content = boost::multiprecision::gcd(content, abs(c));
        bool negate = rel.terms.front().second < 0;
        for (auto& [ids, c] : rel.terms) {
            c /= content;
            if (negate) c = -c;
        }
        if (seen.insert(rel.terms).second) out.push_back(std::move(rel));
    };

    std::vector<int> idx;
    auto foreach_distinct = [&](int len, auto&& body) {
        idx.assign(len, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == len) {
                body(idx);
                return;
            }
            for (int v = 0; v < m; ++v) {
                bool used = false;
                for (int q = 0; q < pos; ++q)
                    if (idx[q] == v) used = true;
                if (used) continue;
                idx[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    };

    if (kind == AlgebraKind::LambdaPrime) {
        // nu_{ijk} nu_{ijl} = 0 over ordered distinct (i,j,k,l)
        foreach_distinct(4, [&](const std::vector<int>& w) {
            int i = w[0], j = w[1], k = w[2], l = w[3];
            push(detail::make_relation(2, {{{{i, j, k}, {i, j, l}}, BigInt(1)}}, gens));
        });
        // cyclic five-term quadratic relation over ordered distinct 5-tuples
        foreach_distinct(5, [&](const std::vector<int>& w) {
            std::vector<std::pair<std::vector<std::vector<int>>, BigInt>> raw;
            for (int r = 0; r < 5; ++r) {
                auto at = [&](int q) { return w[(r + q) % 5]; };
                raw.push_back({{{at(0), at(1), at(2)}, {at(2), at(3), at(4)}}, BigInt(1)});
            }
            push(detail::make_relation(2, raw, gens));
        });
    } else {
        // omega_{ijkl} omega_{ijkm} = 0 over ordered distinct (i,j,k,l,m)
        foreach_distinct(5, [&](const std::vector<int>& w) {
            int i = w[0], j = w[1], k = w[2], l = w[3], mm = w[4];
            push(detail::make_relation(2, {{{{i, j, k, l}, {i, j, k, mm}}, BigInt(1)}}, gens));
        });
        // cyclic five-term linear relation over ordered distinct 5-tuples
        foreach_distinct(5, [&](const std::vector<int>& w) {
            std::vector<std::pair<std::vector<std::vector<int>>, BigInt>> raw;
            for (int r = 0; r < 5; ++r) {
                auto at = [&](int q) { return w[(r + q) % 5]; };
                raw.push_back({{{at(0), at(1), at(2), at(3)}}, BigInt(1)});
            }
            push(detail::make_relation(1, raw, gens));
        });
    }
    return out;
}

using SparseRowZ = std::vector<std::pair<long long, BigInt>>;
using SparseRowQ = std::vector<std::pair<long long, BigRational>>;

/* One graded piece of the algebra: the ambient squarefree monomials of the
   degree together with a reduced row-echelon basis of the degree-d slice of
   the relation ideal.  Everything is exact over Q and deterministic. */
struct GradedComponent {
    AlgebraKind kind{};
    int m = 0;
    int degree = 0;
    long long ambient_dim = 0;
    long long quotient_dim = 0;
    std::vector<long long> pivot_cols;   // ascending
    std::vector<SparseRowQ> rref_rows;   // aligned with pivot_cols, pivot coefficient 1
    std::vector<long long> nonpivot_cols;

    bool is_pivot(long long col) const {
        return std::binary_search(pivot_cols.begin(), pivot_cols.end(), col);
    }
    int pivot_index(long long col) const {
        return static_cast<int>(std::lower_bound(pivot_cols.begin(), pivot_cols.end(), col) -
                                pivot_cols.begin());
    }
};

namespace detail {

inline void strip_content(SparseRowZ& row) {
    if (row.empty()) return;
    BigInt g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, abs(v));
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
}

/* a*r - b*e for sorted sparse rows */
inline SparseRowZ row_combine(const BigInt& a, const SparseRowZ& r, const BigInt& b, const SparseRowZ& e) {
    SparseRowZ out;
    out.reserve(r.size() + e.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < e.size()) {
        if (j == e.size() || (i < r.size() && r[i].first < e[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || e[j].first < r[i].first) {
            out.emplace_back(e[j].first, -b * e[j].second);
            ++j;
        } else {
            BigInt v = a * r[i].second - b * e[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

/* Configuration shared by all oracle computations. */
struct Options {
    long long max_ambient = 100000;  // refuse larger ambient monomial bases
    std::string cache_dir;           // empty: no on-disk cache
};
inline Options& options() {
    static Options opts;
    return opts;
}

namespace detail {

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string component_payload(const GradedComponent& c) {
    std::ostringstream out;
    out << kind_name(c.kind) << " m=" << c.m << " d=" << c.degree << " ambient=" << c.ambient_dim
        << " quotient=" << c.quotient_dim << "\n";
    for (size_t i = 0; i < c.pivot_cols.size(); ++i) {
        out << c.pivot_cols[i];
        for (const auto& [col, v] : c.rref_rows[i]) out << " " << col << ":" << v;
        out << "\n";
    }
    return out.str();
}

inline std::string cache_file(AlgebraKind kind, int m, int d) {
    return options().cache_dir + "/" + kind_name(kind) + "_m" + std::to_string(m) + "_d" +
           std::to_string(d) + ".comp";
}

inline void save_component(const GradedComponent& c) {
    if (options().cache_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(options().cache_dir, ec);
    std::string payload = component_payload(c);
    std::ofstream out(cache_file(c.kind, c.m, c.degree));
    if (!out) return;
    out << "realmoduli-component v1 checksum=" << fnv1a(payload) << "\n" << payload;
}

inline bool load_component(AlgebraKind kind, int m, int d, GradedComponent& c) {
    if (options().cache_dir.empty()) return false;
    std::ifstream in(cache_file(kind, m, d));
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    const std::string prefix = "realmoduli-component v1 checksum=";
    if (header.rfind(prefix, 0) != 0) return false;
    uint64_t checksum = 0;
    try {
        checksum = std::stoull(header.substr(prefix.size()));
    } catch (...) {
        return false;
    }
    std::stringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (fnv1a(payload) != checksum) return false;

    std::istringstream ps(payload);
    std::string kindstr;
    char eq;
    std::string token;
    GradedComponent parsed;
    parsed.kind = kind;
    ps >> kindstr;
    if (kindstr != kind_name(kind)) return false;
    auto read_kv = [&](const std::string& key, long long& dst) {
        ps >> token;
        if (token.rfind(key + "=", 0) != 0) return false;
        dst = std::stoll(token.substr(key.size() + 1));
        return true;
    };
    long long mm = 0, dd = 0;
    if (!read_kv("m", mm) || !read_kv("d", dd) || !read_kv("ambient", parsed.ambient_dim) ||
        !read_kv("quotient", parsed.quotient_dim))
        return false;
    if (mm != m || dd != d) return false;
    parsed.m = m;
    parsed.degree = d;
    std::string line;
    std::getline(ps, line);  // consume end of header line
    while (std::getline(ps, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long pivot;
        ls >> pivot;
        SparseRowQ row;
        std::string entry;
        while (ls >> entry) {
            auto colon = entry.find(':');
            if (colon == std::string::npos) return false;
            long long col = std::stoll(entry.substr(0, colon));
            BigRational v(entry.substr(colon + 1));
            row.emplace_back(col, v);
        }
        parsed.pivot_cols.push_back(pivot);
        parsed.rref_rows.push_back(std::move(row));
        (void)eq;
    }
    long long ncols = parsed.ambient_dim;
    std::vector<bool> ispivot(static_cast<size_t>(ncols), false);
    for (long long p : parsed.pivot_cols) {
        if (p < 0 || p >= ncols) return false;
        ispivot[static_cast<size_t>(p)] = true;
    }
    for (long long col = 0; col < ncols; ++col)
        if (!ispivot[static_cast<size_t>(col)]) parsed.nonpivot_cols.push_back(col);
    if (parsed.quotient_dim != static_cast<long long>(parsed.nonpivot_cols.size())) return false;
    c = std::move(parsed);
    return true;
}

}  // namespace detail

/* Build one graded component: enumerate the degree-d slice of the relation
   ideal (products of relations with complementary monomials), then compute
   a fraction-free row echelon form followed by back-substitution to reduced
   echelon form.  Pivot order is the lexicographic monomial order. */
inline GradedComponent build_component(AlgebraKind kind, int m, int d) {
    if (m < 0 || d < 0) throw std::invalid_argument("build_component: negative parameters");
    GeneratorSet gens(m, generator_arity(kind));
    MonomialBasis basis(gens.count(), d);
    if (basis.count() > options().max_ambient)
        throw resource_cap_error("build_component: ambient dimension " + std::to_string(basis.count()) +
                                 " exceeds the cap " + std::to_string(options().max_ambient) +
                                 " (" + kind_name(kind) + ", m=" + std::to_string(m) +
                                 ", d=" + std::to_string(d) + ")");

    GradedComponent comp;
    comp.kind = kind;
    comp.m = m;
    comp.degree = d;
    comp.ambient_dim = basis.count();
    if (detail::load_component(kind, m, d, comp)) return comp;

    // --- enumerate ideal rows -------------------------------------------
    std::set<SparseRowZ> row_set;
    for (const Relation& rel : relations(kind, m, gens)) {
        if (rel.degree > d) continue;
        MonomialBasis cobasis(gens.count(), d - rel.degree);
        std::vector<int> scratch;
        for (long long cr = 0; cr < cobasis.count(); ++cr) {
            std::vector<int> mu = cobasis.unrank(cr);
            std::map<long long, BigInt> acc;
            for (const auto& [ids, coeff] : rel.terms) {
                scratch = mu;
                scratch.insert(scratch.end(), ids.begin(), ids.end());
                int sign = sort_with_sign(scratch);
                if (sign == 0) continue;
                long long col = basis.rank(scratch);
                auto it = acc.find(col);
                if (it == acc.end())
                    acc.emplace(col, coeff * sign);
                else {
                    it->second += coeff * sign;
                    if (it->second == 0) acc.erase(it);
                }
            }
            if (acc.empty()) continue;
            SparseRowZ row(acc.begin(), acc.end());
            detail::strip_content(row);
            row_set.insert(std::move(row));
        }
    }
    std::vector<SparseRowZ> queue(row_set.begin(), row_set.end());
    std::stable_sort(queue.begin(), queue.end(),
                     [](const SparseRowZ& a, const SparseRowZ& b) { return a.size() < b.size(); });
    row_set.clear();

    // --- fraction-free forward elimination ------------------------------
    std::map<long long, int> pivot_of;  // column -> index into echelon
    std::vector<SparseRowZ> echelon;
    for (SparseRowZ& row : queue) {
        SparseRowZ r = std::move(row);
        while (!r.empty()) {
            long long lead = r.front().first;
            auto it = pivot_of.find(lead);
            if (it == pivot_of.end()) {
                detail::strip_content(r);
                pivot_of.emplace(lead, static_cast<int>(echelon.size()));
                echelon.push_back(std::move(r));
                break;
            }
            const SparseRowZ& e = echelon[it->second];
            r = detail::row_combine(e.front().second, r, r.front().second, e);
            detail::strip_content(r);
        }
    }
    queue.clear();

    const long long npivots = static_cast<long long>(echelon.size());
    comp.quotient_dim = comp.ambient_dim - npivots;

    comp.pivot_cols.reserve(pivot_of.size());
    for (const auto& [col, idx] : pivot_of) comp.pivot_cols.push_back(col);
    {
        std::vector<bool> ispivot(static_cast<size_t>(comp.ambient_dim), false);
        for (long long p : comp.pivot_cols) ispivot[static_cast<size_t>(p)] = true;
        for (long long col = 0; col < comp.ambient_dim; ++col)
            if (!ispivot[static_cast<size_t>(col)]) comp.nonpivot_cols.push_back(col);
    }

    // --- back-substitution to reduced echelon form -----------------------
    // Process pivots from the highest column down; afterwards each row is
    // supported on its own pivot (coefficient 1) and non-pivot columns, so
    // expansion coefficients of any ideal vector can be read off directly.
    if (comp.quotient_dim > 0 || npivots > 0) {
        std::vector<SparseRowQ> rref(static_cast<size_t>(npivots));
        std::vector<int> order;  // indices of pivot_cols descending
        for (long long i = npivots - 1; i >= 0; --i) order.push_back(static_cast<int>(i));
        std::map<long long, int> pivot_slot;
        for (size_t i = 0; i < comp.pivot_cols.size(); ++i)
            pivot_slot[comp.pivot_cols[i]] = static_cast<int>(i);
        for (int slot : order) {
            long long pcol = comp.pivot_cols[slot];
            const SparseRowZ& src = echelon[pivot_of[pcol]];
            BigRational lead(src.front().second);
            std::map<long long, BigRational> work;
            for (const auto& [c, v] : src) work[c] = BigRational(v) / lead;
            // Eliminate entries sitting on later pivot columns.  Rows used
            // for elimination are already reduced, so they only reintroduce
            // non-pivot columns; one snapshot pass is therefore complete.
            std::vector<std::pair<long long, BigRational>> to_clear;
            for (const auto& [c, v] : work)
                if (c != pcol && pivot_slot.count(c)) to_clear.emplace_back(c, v);
            for (const auto& [c, coeff] : to_clear) {
                work.erase(c);
                for (const auto& [rc, rv] : rref[pivot_slot[c]]) {
                    if (rc == c) continue;  // cancels with the erased entry
                    auto [pos, inserted] = work.emplace(rc, -coeff * rv);
                    if (!inserted) {
                        pos->second -= coeff * rv;
                        if (pos->second == 0) work.erase(pos);
                    }
                }
            }
            SparseRowQ qrow(work.begin(), work.end());
            rref[slot] = std::move(qrow);
        }
        comp.rref_rows = std::move(rref);
    }

    detail::save_component(comp);
    return comp;
}

/* Process-wide component store (always-on in-memory cache). */
inline const GradedComponent& get_component(AlgebraKind kind, int m, int d) {
    static std::map<std::tuple<int, int, int>, std::unique_ptr<GradedComponent>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(kind), m, d);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<GradedComponent>(build_component(kind, m, d))).first;
    return *it->second;
}

/* Image of generator id under a ground-set map; {-1,0} when indices
   collide (the generator maps to zero). */
inline std::pair<int, int> map_generator(const GeneratorSet& src, const GeneratorSet& dst, int id,
                                         const std::vector<int>& f) {
    std::vector<int> t = src.tuple(id);
    for (int& x : t) x = f[x];
    return dst.canonical(t);
}

/* Signed image of an ascending monomial under a ground map; {-1, {}} when
   it dies. */
inline std::pair<int, std::vector<int>> map_monomial(const std::vector<int>& mono,
                                                     const std::vector<std::pair<int, int>>& gen_image) {
    int sign = 1;
    std::vector<int> ids;
    ids.reserve(mono.size());
    for (int g : mono) {
        const auto& [img, s] = gen_image[g];
        if (s == 0) return {0, {}};
        sign *= s;
        ids.push_back(img);
    }
    int order = sort_with_sign(ids);
    if (order == 0) return {0, {}};
    return {sign * order, std::move(ids)};
}

/* Trace of a permutation of the ground set on the ambient degree-d space:
   monomials fixed up to sign contribute that sign. */
inline BigInt ambient_trace(AlgebraKind kind, int m, int d, const std::vector<int>& perm) {
    GeneratorSet gens(m, generator_arity(kind));
    MonomialBasis basis(gens.count(), d);
    std::vector<std::pair<int, int>> gen_image(gens.count());
    for (int g = 0; g < gens.count(); ++g) gen_image[g] = map_generator(gens, gens, g, perm);
    BigInt tr = 0;
    for (long long col = 0; col < basis.count(); ++col) {
        std::vector<int> mono = basis.unrank(col);
        auto [sign, img] = map_monomial(mono, gen_image);
        if (sign != 0 && img == mono) tr += sign;
    }
    return tr;
}

/* Trace of the permutation on the ideal slice, read off the reduced echelon
   basis: the coefficient of b_i in P b_i is the entry of b_i at the
   preimage of its pivot column, times the sign of the preimage monomial. */
inline BigRational ideal_trace(const GradedComponent& comp, const std::vector<int>& perm) {
    if (comp.pivot_cols.empty()) return 0;
    GeneratorSet gens(comp.m, generator_arity(comp.kind));
    MonomialBasis basis(gens.count(), comp.degree);
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[static_cast<size_t>(perm[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> gen_image(gens.count());
    for (int g = 0; g < gens.count(); ++g) gen_image[g] = map_generator(gens, gens, g, inv);

    BigRational tr = 0;
    for (size_t i = 0; i < comp.pivot_cols.size(); ++i) {
        std::vector<int> mono = basis.unrank(comp.pivot_cols[i]);
        auto [sign, pre] = map_monomial(mono, gen_image);
        if (sign == 0) continue;
        long long col = basis.rank(pre);
        const SparseRowQ& row = comp.rref_rows[i];
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& a, long long c) { return a.first < c; });
        if (it != row.end() && it->first == col) tr += BigRational(sign) * it->second;
    }
    return tr;
}

/* Trace on the degree-d quotient. */
inline BigInt quotient_trace(AlgebraKind kind, int m, int d, const std::vector<int>& perm) {
    const GradedComponent& comp = get_component(kind, m, d);
    if (comp.quotient_dim == 0) return 0;
    BigRational tr = BigRational(ambient_trace(kind, m, d, perm)) - ideal_trace(comp, perm);
    return to_integer(tr);
}

/* Full graded trace sum_d (-t)^d Tr(pi | quotient_d); the algebra is
   generated in degree 1, so the first vanishing component ends the sum. */
inline GradedCharacter graded_trace(AlgebraKind kind, int m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("graded_trace: permutation size mismatch");
    GradedCharacter out;
    for (int d = 0;; ++d) {
        const GradedComponent& comp = get_component(kind, m, d);
        if (comp.quotient_dim == 0) break;
        BigInt tr = quotient_trace(kind, m, d, perm);
        if (tr != 0) out.set_signed_coeff(d, (d % 2 == 0) ? tr : -tr);
    }
    return out;
}

/* Quotient dimensions by degree, until the first zero. */
inline std::vector<long long> quotient_dims(AlgebraKind kind, int m) {
    std::vector<long long> dims;
    for (int d = 0;; ++d) {
        const GradedComponent& comp = get_component(kind, m, d);
        if (comp.quotient_dim == 0) break;
        dims.push_back(comp.quotient_dim);
    }
    return dims;
}

/* Reduce an ambient vector modulo the ideal using the reduced echelon
   basis; the result is supported on non-pivot columns and represents the
   class canonically. */
inline std::map<long long, BigRational> reduce_by_ideal(const GradedComponent& comp,
                                                        std::map<long long, BigRational> v) {
    for (size_t i = 0; i < comp.pivot_cols.size(); ++i) {
        auto it = v.find(comp.pivot_cols[i]);
        if (it == v.end()) continue;
        BigRational coeff = it->second;
        v.erase(it);
        for (const auto& [c, val] : comp.rref_rows[i]) {
            if (c == comp.pivot_cols[i]) continue;
            auto [pos, inserted] = v.emplace(c, -coeff * val);
            if (!inserted) {
                pos->second -= coeff * val;
                if (pos->second == 0) v.erase(pos);
            }
        }
    }
    return v;
}

/* Matrix of the degree-d functorial map Lambda(f) (or LambdaPrime(f)) on
   quotients, in the canonical non-pivot monomial bases; entry (r, c) is the
   coefficient of target basis vector r in the image of source basis vector
   c.  Ground maps need not be injective: colliding generators map to 0. */
inline std::vector<std::vector<BigRational>> apply_map(AlgebraKind kind, const std::vector<int>& f,
                                                       int m_src, int m_dst, int d) {
    for (int x : f)
        if (x < 0 || x >= m_dst) throw std::invalid_argument("apply_map: image out of range");
    if (static_cast<int>(f.size()) != m_src) throw std::invalid_argument("apply_map: size mismatch");
    const GradedComponent& src = get_component(kind, m_src, d);
    const GradedComponent& dst = get_component(kind, m_dst, d);
    GeneratorSet gens_src(m_src, generator_arity(kind));
    GeneratorSet gens_dst(m_dst, generator_arity(kind));
    MonomialBasis basis_src(gens_src.count(), d);
    MonomialBasis basis_dst(gens_dst.count(), d);
    std::vector<std::pair<int, int>> gen_image(gens_src.count());
    for (int g = 0; g < gens_src.count(); ++g) gen_image[g] = map_generator(gens_src, gens_dst, g, f);

    std::map<long long, int> dst_slot;
    for (size_t i = 0; i < dst.nonpivot_cols.size(); ++i)
        dst_slot[dst.nonpivot_cols[i]] = static_cast<int>(i);

    std::vector<std::vector<BigRational>> mat(
        static_cast<size_t>(dst.quotient_dim),
        std::vector<BigRational>(static_cast<size_t>(src.quotient_dim), BigRational(0)));
    for (size_t c = 0; c < src.nonpivot_cols.size(); ++c) {
        std::vector<int> mono = basis_src.unrank(src.nonpivot_cols[c]);
        auto [sign, img] = map_monomial(mono, gen_image);
        if (sign == 0) continue;
        std::map<long long, BigRational> v;
        v[basis_dst.rank(img)] = BigRational(sign);
        for (const auto& [col, val] : reduce_by_ideal(dst, std::move(v)))
            mat[static_cast<size_t>(dst_slot.at(col))][c] = val;
    }
    return mat;
}

}  // namespace realmoduli::oracle
