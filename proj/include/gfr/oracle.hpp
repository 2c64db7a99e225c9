// Global ground truth against which the local agent is checked: the virtual
// multigraph Gamma of non-trivial border walks, intersection numbers and
// the bilinear-form properties, the counting argument bounding |Gamma| by
// 2g, Gamma* connectivity, and the capping identity.

#ifndef GFR_ORACLE_HPP
#define GFR_ORACLE_HPP

#include <gfr/embedding.hpp>
#include <gfr/regions.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gfr {

// Directed edge of G whose left side is the region the curve leaves at this
// crossing (the side the curve comes from).
inline DirEdge crossing_before_side(const EmbeddedGraph& g, int edge, int slot) {
    const Crossing& c = g.edges[static_cast<size_t>(edge)].crossings[static_cast<size_t>(slot)];
    return de_make(edge, c.sign == 1);
}
inline DirEdge crossing_after_side(const EmbeddedGraph& g, int edge, int slot) {
    return de_reverse(crossing_before_side(g, edge, slot));
}

// The walk determined by the first exit edge clockwise from direction `dir`
// at node `at` (the MSFR start rule).
inline int clockwise_rule_walk(const EmbeddedGraph& g, int at, const Pt& dir) {
    const std::vector<EdgeEnd>& rot = g.rotation[static_cast<size_t>(at)];
    if (rot.empty()) throw gfr_error(Errc::InvalidInstance, "isolated node");
    size_t best = 0;
    for (size_t i = 1; i < rot.size(); ++i)
        if (ccw_from_base_less(dir, g.end_dir(rot[best]), g.end_dir(rot[i]))) best = i;
    // maximal ccw angle from dir = first edge met sweeping clockwise
    return g.walk_of[static_cast<size_t>(g.end_to_diredge(rot[best]))];
}

struct GammaEdge {
    int walk_a = -1, walk_b = -1;  // NTBW endpoints (start side, end side)
    int curve = 0;                 // forward curve index (0 = gamma)
    Rat t_start, t_end;
};

struct GammaGraph {
    std::vector<int> vertices;  // region-based NTBW walk ids, sorted
    std::vector<GammaEdge> edges;
    int first_gamma = -1;  // NTBW met first along gamma (-1: none)
    int last_gamma = -1;

    bool has_vertex(int walk) const {
        return std::binary_search(vertices.begin(), vertices.end(), walk);
    }
    // Connected reachability; star_only drops the gamma-derived edges.
    bool connected(int from, int to, bool star_only) const {
        if (from == to) return true;
        std::set<int> seen{from};
        std::deque<int> q{from};
        while (!q.empty()) {
            int w = q.front();
            q.pop_front();
            for (const GammaEdge& e : edges) {
                if (star_only && e.curve == 0) continue;
                int nxt = -1;
                if (e.walk_a == w) nxt = e.walk_b;
                else if (e.walk_b == w) nxt = e.walk_a;
                else continue;
                if (nxt == to) return true;
                if (seen.insert(nxt).second) q.push_back(nxt);
            }
        }
        return false;
    }
};

inline GammaGraph gamma_graph(const EmbeddedGraph& g, const RegionDecomposition& rd) {
    GammaGraph gg;
    for (size_t w = 0; w < g.walks.size(); ++w)
        if (rd.walk_is_ntbw(static_cast<int>(w))) gg.vertices.push_back(static_cast<int>(w));

    int gen = g.genus();
    for (int ci = 0; ci <= 2 * gen; ++ci) {
        const auto& cr = g.curve_crossings[static_cast<size_t>(ci)];
        const auto& pieces = rd.curve_pieces[static_cast<size_t>(ci)];
        auto trivial = [&](size_t piece) {
            return rd.regions[static_cast<size_t>(pieces[piece])].trivial;
        };
        auto cross_t = [&](size_t k) {
            return g.edges[static_cast<size_t>(cr[k].first)]
                .crossings[static_cast<size_t>(cr[k].second)]
                .t;
        };
        auto before_walk = [&](size_t k) {
            return g.walk_of[static_cast<size_t>(crossing_before_side(g, cr[k].first, cr[k].second))];
        };
        auto after_walk = [&](size_t k) {
            return g.walk_of[static_cast<size_t>(crossing_after_side(g, cr[k].first, cr[k].second))];
        };
        bool closed = g.curves.at(ci).closed;
        size_t k = cr.size();
        if (closed) {
            if (k == 0) continue;  // whole curve inside one region
            for (size_t i = 0; i < k; ++i) {
                if (trivial((i + k - 1) % k)) continue;  // piece before crossing i
                // component starts at crossing i; find the first non-trivial
                // piece after it
                size_t j = i;
                size_t guard = 0;
                while (trivial(j) && guard++ <= k) j = (j + 1) % k;
                if (guard > k) break;  // all pieces trivial: no endpoints
                GammaEdge e;
                e.walk_a = before_walk(i);
                e.walk_b = after_walk(j);
                e.curve = ci;
                e.t_start = cross_t(i);
                e.t_end = cross_t(j);
                gg.edges.push_back(e);
            }
        } else {
            // gamma: pieces[0] starts at S, pieces[k] ends at T
            for (size_t c = 0; c < k; ++c) {
                if (trivial(c)) continue;  // need non-trivial piece before crossing c
                size_t j = c;
                while (j < k && trivial(j + 1)) ++j;
                if (j >= k) break;  // trailing run reaches T: no second endpoint
                GammaEdge e;
                e.walk_a = before_walk(c);
                e.walk_b = after_walk(j);
                e.curve = 0;
                e.t_start = cross_t(c);
                e.t_end = cross_t(j);
                gg.edges.push_back(e);
            }
            // first and last NTBW met by gamma
            const Polyline& gp = g.curves.at(0).poly;
            if (!trivial(0)) {
                gg.first_gamma = clockwise_rule_walk(g, g.src, gp.pts[1] - gp.pts[0]);
            } else {
                for (size_t i = 1; i <= k; ++i)
                    if (!trivial(i)) { gg.first_gamma = after_walk(i - 1); break; }
            }
            if (!trivial(k)) {
                gg.last_gamma = clockwise_rule_walk(g, g.dst, gp.pts[gp.pts.size() - 2] - gp.pts.back());
            } else {
                for (size_t i = k; i-- > 0;)
                    if (!trivial(i)) { gg.last_gamma = before_walk(i); break; }
            }
        }
    }
    std::sort(gg.vertices.begin(), gg.vertices.end());
    return gg;
}

// ---------------------------------------------------------------------------
// intersection numbers

struct CycleAtom {
    bool is_basis = true;
    int curve = 0;  // basis index 1..4g (reversed allowed)
    int walk = -1;  // walk id when !is_basis
};

struct Cycle {
    std::vector<std::pair<long long, CycleAtom>> terms;

    static Cycle basis(int curve_index, long long coef = 1) {
        Cycle c;
        c.terms.push_back({coef, CycleAtom{true, curve_index, -1}});
        return c;
    }
    static Cycle border_walk(int walk_id, long long coef = 1) {
        Cycle c;
        c.terms.push_back({coef, CycleAtom{false, 0, walk_id}});
        return c;
    }
    Cycle& add(const Cycle& o, long long scale = 1) {
        for (const auto& [co, at] : o.terms) terms.push_back({co * scale, at});
        return *this;
    }
};

namespace detail {

// Basis curve pairs: normalize a possibly reversed index onto the forward
// index and an orientation factor.
inline std::pair<int, int> normalize_basis(const CurveTable& tab, int idx) {
    int g = tab.genus;
    if (idx <= 2 * g) return {idx, 1};
    return {idx - 2 * g, -1};
}

inline long long basis_pair_number(const CurveTable& tab, int ia, int ib) {
    auto [fa, sa] = normalize_basis(tab, ia);
    auto [fb, sb] = normalize_basis(tab, ib);
    int g = tab.genus;
    if (fa == fb) return 0;  // coinciding curves pair to zero by convention
    // mu_i lives at index i, lambda_i at g + i
    if (fa <= g && fb == g + fa) return sa * sb * 1;    // #(mu_i, lambda_i) = +1
    if (fb <= g && fa == g + fb) return sa * sb * -1;   // #(lambda_i, mu_i) = -1
    return 0;
}

inline long long walk_basis_number(const EmbeddedGraph& g, int walk_id, int curve_idx) {
    auto [fwd, orient_factor] = normalize_basis(g.curves, curve_idx);
    long long total = 0;
    for (DirEdge d : g.walks[static_cast<size_t>(walk_id)].edges) {
        int dirf = de_forward(d) ? 1 : -1;
        for (const Crossing& c : g.edges[static_cast<size_t>(de_edge(d))].crossings)
            if (c.curve == fwd) total += dirf * c.sign;
    }
    return total * orient_factor;
}

// Crossings of two edge-disjoint closed walks happen only at shared nodes;
// the sign comes from the interleaving of the four edge ends in the node's
// rotation.
inline long long walk_walk_number(const EmbeddedGraph& g, int wa, int wb) {
    const BorderWalk& A = g.walks[static_cast<size_t>(wa)];
    const BorderWalk& B = g.walks[static_cast<size_t>(wb)];
    if (A.key == B.key) return 0;  // coinciding cycles
    std::set<int> ea, eb;
    for (DirEdge d : A.edges) ea.insert(de_edge(d));
    for (DirEdge d : B.edges) eb.insert(de_edge(d));
    for (int e : ea)
        if (eb.count(e))
            throw gfr_error(Errc::SharedArc, "cycles share edge " + std::to_string(e));

    // passes through each node: (incoming end, outgoing end)
    auto passes = [&](const BorderWalk& W) {
        std::map<int, std::vector<std::pair<EdgeEnd, EdgeEnd>>> out;
        size_t n = W.edges.size();
        for (size_t i = 0; i < n; ++i) {
            DirEdge din = W.edges[i];
            DirEdge dout = W.edges[(i + 1) % n];
            int v = g.head(din);
            out[v].push_back({g.incoming_end(din), EdgeEnd{de_edge(dout), de_forward(dout)}});
        }
        return out;
    };
    auto pa = passes(A), pb = passes(B);
    long long total = 0;
    for (const auto& [v, alist] : pa) {
        auto it = pb.find(v);
        if (it == pb.end()) continue;
        const std::vector<EdgeEnd>& rot = g.rotation[static_cast<size_t>(v)];
        auto slot = [&](const EdgeEnd& e) {
            for (size_t i = 0; i < rot.size(); ++i)
                if (rot[i] == e) return static_cast<int>(i);
            throw gfr_error(Errc::InvalidInstance, "end missing from rotation");
        };
        for (const auto& [a_in, a_out] : alist)
            for (const auto& [b_in, b_out] : it->second) {
                // rotation is clockwise; measure positions counterclockwise
                // from b_out and see on which side of B each A end falls
                int n = static_cast<int>(rot.size());
                auto ccw_from_bout = [&](const EdgeEnd& e) {
                    return ((slot(b_out) - slot(e)) % n + n) % n;  // cw list: ccw = backwards
                };
                int pin = ccw_from_bout(b_in);
                int qa = ccw_from_bout(a_in);
                int qo = ccw_from_bout(a_out);
                // B's left sector: ends strictly ccw-between b_out and b_in
                bool a_in_left = qa > 0 && qa < pin;
                bool a_out_left = qo > 0 && qo < pin;
                if (a_in_left == a_out_left) continue;  // touch, no crossing
                total += a_in_left ? -1 : 1;  // right -> left is +1
            }
    }
    return total;
}

}  // namespace detail

inline long long intersection_number(const EmbeddedGraph& g, const Cycle& a, const Cycle& b) {
    long long total = 0;
    for (const auto& [ca, at_a] : a.terms)
        for (const auto& [cb, at_b] : b.terms) {
            long long v;
            if (at_a.is_basis && at_b.is_basis)
                v = detail::basis_pair_number(g.curves, at_a.curve, at_b.curve);
            else if (!at_a.is_basis && at_b.is_basis)
                v = detail::walk_basis_number(g, at_a.walk, at_b.curve);
            else if (at_a.is_basis && !at_b.is_basis)
                v = -detail::walk_basis_number(g, at_b.walk, at_a.curve);
            else
                v = detail::walk_walk_number(g, at_a.walk, at_b.walk);
            total += ca * cb * v;
        }
    return total;
}

// ---------------------------------------------------------------------------
// checkers

struct PropositionReport {
    bool pass = true;
    bool vacuous = false;
    int ntbw_count = 0;          // N
    int nontrivial_regions = 0;  // k
    int genus = 0;
    std::string detail;
};

inline PropositionReport check_proposition(const EmbeddedGraph& g, const RegionDecomposition& rd,
                                           const GammaGraph& gg) {
    PropositionReport rep;
    rep.genus = g.genus();
    rep.ntbw_count = static_cast<int>(gg.vertices.size());
    for (const Region& r : rd.regions)
        if (!r.trivial) ++rep.nontrivial_regions;
    if (rep.ntbw_count > 2 * rep.genus) {
        rep.pass = false;
        rep.detail = "|Gamma| exceeds 2g";
    }
    if (rep.ntbw_count - rep.nontrivial_regions > rep.genus || rep.nontrivial_regions > rep.genus) {
        rep.pass = false;
        rep.detail += " counting bound violated";
    }
    if (gg.first_gamma < 0) {
        rep.vacuous = true;
        return rep;
    }
    if (gg.last_gamma < 0) {
        rep.pass = false;
        rep.detail += " gamma meets a first NTBW but no last";
        return rep;
    }
    if (!gg.connected(gg.first_gamma, gg.last_gamma, false)) {
        rep.pass = false;
        rep.detail += " no Gamma path from first(gamma) to last(gamma)";
    }
    return rep;
}

struct FormReport {
    bool pass = true;
    int rank = 0;
    std::string detail;
};

// Rank of the 2g x 2g basis Gram matrix over the rationals, plus exact
// bilinearity and homology-invariance spot checks drawn from the instance.
inline FormReport check_form_properties(const EmbeddedGraph& g, const RegionDecomposition& rd,
                                        int samples = 50, uint64_t seed = 1) {
    FormReport rep;
    int gen = g.genus();
    int n = 2 * gen;
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rat(intersection_number(g, Cycle::basis(1 + i), Cycle::basis(1 + j)));
    // antisymmetry
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                -m[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                rep.pass = false;
                rep.detail = "Gram matrix not antisymmetric";
            }
    // rank by fraction Gaussian elimination
    {
        auto a = m;
        int rank = 0;
        for (int col = 0; col < n && rank < n; ++col) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
            for (int r = rank + 1; r < n; ++r) {
                if (a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) continue;
                Rat f = a[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                        a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
                for (int c2 = col; c2 < n; ++c2)
                    a[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                        f * a[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
            }
            ++rank;
        }
        rep.rank = rank;
        if (rank != n) {
            rep.pass = false;
            rep.detail += " Gram rank below 2g";
        }
    }
    // bilinearity and homology invariance on random samples
    uint64_t st = seed;
    auto rnd = [&]() {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        return st >> 33;
    };
    for (int it = 0; it < samples; ++it) {
        long long c1 = static_cast<long long>(rnd() % 9) - 4;
        long long c2 = static_cast<long long>(rnd() % 9) - 4;
        if (n > 0) {
            int i = 1 + static_cast<int>(rnd() % static_cast<uint64_t>(2 * n));
            int j = 1 + static_cast<int>(rnd() % static_cast<uint64_t>(2 * n));
            int k = 1 + static_cast<int>(rnd() % static_cast<uint64_t>(2 * n));
            Cycle sum = Cycle::basis(i, c1);
            sum.add(Cycle::basis(j), c2);
            long long lhs = intersection_number(g, sum, Cycle::basis(k));
            long long rhs = c1 * intersection_number(g, Cycle::basis(i), Cycle::basis(k)) +
                            c2 * intersection_number(g, Cycle::basis(j), Cycle::basis(k));
            if (lhs != rhs) { rep.pass = false; rep.detail += " bilinearity failed"; }
        }
        if (!g.walks.empty() && n > 0) {
            int w = static_cast<int>(rnd() % g.walks.size());
            int k = 1 + static_cast<int>(rnd() % static_cast<uint64_t>(2 * n));
            Cycle sum = Cycle::border_walk(w, c1);
            sum.add(Cycle::basis(k), c2);
            int j = 1 + static_cast<int>(rnd() % static_cast<uint64_t>(n));
            long long lhs = intersection_number(g, sum, Cycle::basis(j));
            long long rhs = c1 * intersection_number(g, Cycle::border_walk(w), Cycle::basis(j)) +
                            c2 * intersection_number(g, Cycle::basis(k), Cycle::basis(j));
            if (lhs != rhs) { rep.pass = false; rep.detail += " bilinearity failed"; }
        }
        // walk +- region boundary pairs equally against every basis curve
        if (!rd.regions.empty() && !g.walks.empty()) {
            int w = static_cast<int>(rnd() % g.walks.size());
            int r = static_cast<int>(rnd() % rd.regions.size());
            Cycle hom = Cycle::border_walk(w);
            for (int bw : rd.regions[static_cast<size_t>(r)].walks)
                hom.add(Cycle::border_walk(bw));
            for (int j = 1; j <= n; ++j) {
                long long lhs = intersection_number(g, hom, Cycle::basis(j));
                long long rhs = intersection_number(g, Cycle::border_walk(w), Cycle::basis(j));
                if (lhs != rhs) {
                    rep.pass = false;
                    rep.detail += " homology invariance failed";
                }
            }
        }
    }
    return rep;
}

struct GammaStarReport {
    bool pass = true;
    bool vacuous = true;
    int regions_checked = 0;
    std::string detail;
};

inline GammaStarReport check_gamma_star(const EmbeddedGraph& g, const RegionDecomposition& rd,
                                        const GammaGraph& gg) {
    (void)g;
    GammaStarReport rep;
    for (size_t r = 0; r < rd.regions.size(); ++r) {
        const Region& reg = rd.regions[r];
        if (reg.walks.size() < 2) continue;
        rep.vacuous = false;
        ++rep.regions_checked;
        for (size_t i = 0; i < reg.walks.size(); ++i)
            for (size_t j = i + 1; j < reg.walks.size(); ++j)
                if (!gg.connected(reg.walks[i], reg.walks[j], true)) {
                    rep.pass = false;
                    rep.detail = "region " + std::to_string(r) +
                                 " boundary walks not Gamma*-connected";
                }
    }
    return rep;
}

struct CappingReport {
    bool pass = true;
    int dual_curve = -1;  // the chosen lambda-hat
    long long m = 0;
    std::string detail;
};

inline CappingReport check_capping_identity(const EmbeddedGraph& g, int beta_walk) {
    CappingReport rep;
    int n = 2 * g.genus();
    Cycle beta = Cycle::border_walk(beta_walk);
    for (int j = 1; j <= n; ++j) {
        long long v = intersection_number(g, Cycle::basis(j), beta);
        if (v != 0) { rep.dual_curve = j; rep.m = v; break; }
    }
    if (rep.dual_curve < 0)
        throw gfr_error(Errc::NoDualCurve, "cycle is null-homologous against the basis");
    for (int j = 1; j <= n; ++j) {
        long long coef = intersection_number(g, Cycle::basis(j), beta);
        Cycle s = Cycle::basis(j, rep.m);
        s.add(Cycle::basis(rep.dual_curve), -coef);
        if (intersection_number(g, s, beta) != 0) {
            rep.pass = false;
            rep.detail = "capping identity violated for basis " + std::to_string(j);
        }
    }
    // the side-change remark: a curve pairing nonzero with beta has two
    // cyclically consecutive same-sign crossings along it
    for (int j = 1; j <= n; ++j) {
        if (intersection_number(g, Cycle::basis(j), beta) == 0) continue;
        std::vector<std::pair<Rat, long long>> list;  // net sign per curve point
        for (DirEdge d : g.walks[static_cast<size_t>(beta_walk)].edges) {
            int dirf = de_forward(d) ? 1 : -1;
            for (const Crossing& c : g.edges[static_cast<size_t>(de_edge(d))].crossings)
                if (c.curve == j) {
                    bool found = false;
                    for (auto& [t, s] : list)
                        if (t == c.t) { s += dirf * c.sign; found = true; }
                    if (!found) list.emplace_back(c.t, dirf * c.sign);
                }
        }
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> signs;
        for (auto& [t, s] : list)
            if (s != 0) signs.push_back(s > 0 ? 1 : -1);
        bool has_pair = false;
        for (size_t i = 0; i < signs.size(); ++i)
            if (signs[i] == signs[(i + 1) % signs.size()]) has_pair = true;
        if (signs.size() < 1 || !has_pair) {
            rep.pass = false;
            rep.detail += " side-change component missing for basis " + std::to_string(j);
        }
    }
    return rep;
}

struct NtbwEquivalenceReport {
    int walks = 0;
    int agree = 0;
    int disagree = 0;
    std::vector<int> disagreeing_walks;
};

inline NtbwEquivalenceReport ntbw_equivalence_report(const EmbeddedGraph& g,
                                                     const RegionDecomposition& rd) {
    NtbwEquivalenceReport rep;
    rep.walks = static_cast<int>(g.walks.size());
    for (size_t w = 0; w < g.walks.size(); ++w) {
        bool by_region = rd.walk_is_ntbw(static_cast<int>(w));
        bool by_homology = g.walks[w].nonzero_homology();
        if (by_region == by_homology) ++rep.agree;
        else {
            ++rep.disagree;
            rep.disagreeing_walks.push_back(static_cast<int>(w));
        }
    }
    return rep;
}

}  // namespace gfr

#endif  // GFR_ORACLE_HPP
