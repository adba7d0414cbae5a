#pragma once

// Combinatorial 3-polyhedra with angle labels on edges (label m means
// dihedral angle pi/m), existence checking against the Andreev/Vinberg
// conditions, ridge detection, and the contraction/insertion moves.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace coxgrowth {

using VertexId = int;
using EdgeKey = std::pair<VertexId, VertexId>; // always (min, max)

inline EdgeKey edge_key(VertexId a, VertexId b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

struct CombPolyhedron {
    // face id -> cyclic vertex sequence (consecutive pairs are edges)
    std::map<std::string, std::vector<VertexId>> faces;
    // edge -> label m >= 2
    std::map<EdgeKey, int> angles;

    friend bool operator==(const CombPolyhedron& a, const CombPolyhedron& b) {
        return a.faces == b.faces && a.angles == b.angles;
    }
};

enum class VertexKind { Compact, Ideal3, Ideal4, Invalid };

struct ValidationReport {
    std::vector<std::string> errors;
    bool simplex = false;
    bool deformable = false; // at least 5 faces
    std::size_t n_vertices = 0, n_edges = 0, n_faces = 0;
    bool ok() const { return errors.empty(); }
};

namespace detail {

inline std::string edge_name(const EdgeKey& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

} // namespace detail

inline std::set<VertexId> vertex_set(const CombPolyhedron& p) {
    std::set<VertexId> vs;
    for (const auto& [id, cyc] : p.faces) vs.insert(cyc.begin(), cyc.end());
    return vs;
}

inline std::set<EdgeKey> edge_set(const CombPolyhedron& p) {
    std::set<EdgeKey> es;
    for (const auto& [id, cyc] : p.faces)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            es.insert(edge_key(cyc[i], cyc[(i + 1) % cyc.size()]));
    return es;
}

// faces incident to each vertex
inline std::map<VertexId, std::vector<std::string>> faces_at_vertices(const CombPolyhedron& p) {
    std::map<VertexId, std::vector<std::string>> m;
    for (const auto& [id, cyc] : p.faces)
        for (VertexId v : cyc) m[v].push_back(id);
    return m;
}

inline std::vector<EdgeKey> edges_at_vertex(const CombPolyhedron& p, VertexId v) {
    std::set<EdgeKey> es;
    for (const auto& [id, cyc] : p.faces)
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a == v || b == v) es.insert(edge_key(a, b));
        }
    return {es.begin(), es.end()};
}

inline int angle_label(const CombPolyhedron& p, const EdgeKey& e) {
    auto it = p.angles.find(e);
    if (it == p.angles.end()) throw std::out_of_range("angle_label: unlabelled edge " + detail::edge_name(e));
    return it->second;
}

// Sum of 1/m over the edges at v, as an exact rational multiple of pi.
inline Rat angle_sum_at(const CombPolyhedron& p, VertexId v) {
    Rat s(0);
    for (const auto& e : edges_at_vertex(p, v)) s += Rat(1, angle_label(p, e));
    return s;
}

inline VertexKind vertex_kind(const CombPolyhedron& p, VertexId v) {
    auto es = edges_at_vertex(p, v);
    if (es.size() == 3) {
        Rat s = angle_sum_at(p, v);
        if (s > 1) return VertexKind::Compact;
        if (s == 1) return VertexKind::Ideal3;
        return VertexKind::Invalid;
    }
    if (es.size() == 4) {
        for (const auto& e : es)
            if (angle_label(p, e) != 2) return VertexKind::Invalid;
        return VertexKind::Ideal4;
    }
    return VertexKind::Invalid;
}

inline bool has_ideal_vertex(const CombPolyhedron& p) {
    for (VertexId v : vertex_set(p)) {
        auto k = vertex_kind(p, v);
        if (k == VertexKind::Ideal3 || k == VertexKind::Ideal4) return true;
    }
    return false;
}

inline bool is_compact(const CombPolyhedron& p) {
    for (VertexId v : vertex_set(p))
        if (vertex_kind(p, v) != VertexKind::Compact) return false;
    return true;
}

inline ValidationReport validate(const CombPolyhedron& p) {
    ValidationReport r;
    r.n_faces = p.faces.size();
    if (p.faces.empty()) {
        r.errors.push_back("no faces");
        return r;
    }

    for (const auto& [id, cyc] : p.faces) {
        if (cyc.size() < 3) r.errors.push_back("face " + id + " has fewer than 3 vertices");
        std::set<VertexId> uniq(cyc.begin(), cyc.end());
        if (uniq.size() != cyc.size()) r.errors.push_back("face " + id + " repeats a vertex");
    }
    if (!r.ok()) return r;

    // orientable rotation system: every directed edge in exactly one face
    std::map<std::pair<VertexId, VertexId>, int> directed;
    for (const auto& [id, cyc] : p.faces)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            ++directed[{cyc[i], cyc[(i + 1) % cyc.size()]}];
    auto edges = edge_set(p);
    for (const auto& e : edges) {
        int fwd = directed.count({e.first, e.second}) ? directed[{e.first, e.second}] : 0;
        int bwd = directed.count({e.second, e.first}) ? directed[{e.second, e.first}] : 0;
        if (fwd != 1 || bwd != 1)
            r.errors.push_back("edge " + detail::edge_name(e) +
                               " not traversed once in each direction (rotation system)");
    }

    auto vs = vertex_set(p);
    r.n_vertices = vs.size();
    r.n_edges = edges.size();
    long euler = static_cast<long>(r.n_vertices) - static_cast<long>(r.n_edges) +
                 static_cast<long>(r.n_faces);
    if (euler != 2)
        r.errors.push_back("Euler relation violated: V - E + F = " + std::to_string(euler));

    // labels: every edge labelled, no stray keys
    for (const auto& e : edges)
        if (!p.angles.count(e)) r.errors.push_back("edge " + detail::edge_name(e) + " has no angle label");
    for (const auto& [e, m] : p.angles) {
        if (!edges.count(e)) r.errors.push_back("angle key " + detail::edge_name(e) + " is not an edge");
        if (m < 2) r.errors.push_back("label at " + detail::edge_name(e) + " is below 2");
    }
    if (!r.ok()) return r;

    // faces meet in at most one edge (needed for well-defined dihedral angles)
    std::map<EdgeKey, std::vector<std::string>> edge_faces;
    for (const auto& [id, cyc] : p.faces)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            edge_faces[edge_key(cyc[i], cyc[(i + 1) % cyc.size()])].push_back(id);
    std::map<std::pair<std::string, std::string>, int> shared;
    for (auto& [e, fs] : edge_faces) {
        std::sort(fs.begin(), fs.end());
        if (fs.size() == 2) ++shared[{fs[0], fs[1]}];
    }
    for (const auto& [pr, cnt] : shared)
        if (cnt > 1)
            r.errors.push_back("faces " + pr.first + " and " + pr.second + " share " +
                               std::to_string(cnt) + " edges");

    for (VertexId v : vs) {
        auto es = edges_at_vertex(p, v);
        if (es.size() != 3 && es.size() != 4) {
            r.errors.push_back("vertex " + std::to_string(v) + " has valence " +
                               std::to_string(es.size()) + " (only 3 or 4 allowed)");
            continue;
        }
        if (es.size() == 4) {
            for (const auto& e : es)
                if (angle_label(p, e) != 2)
                    r.errors.push_back("4-valent vertex " + std::to_string(v) +
                                       " carries a non-right label at " + detail::edge_name(e));
        } else if (angle_sum_at(p, v) < 1) {
            r.errors.push_back("vertex " + std::to_string(v) +
                               " has angle sum below pi (no hyperbolic vertex)");
        }
    }

    r.simplex = (r.n_faces == 4);
    r.deformable = (r.n_faces >= 5);
    return r;
}

// --- face adjacency and circuits ------------------------------------------

// face pair -> common edge, for faces meeting along an edge
inline std::map<std::pair<std::string, std::string>, EdgeKey> face_adjacency(const CombPolyhedron& p) {
    std::map<EdgeKey, std::vector<std::string>> edge_faces;
    for (const auto& [id, cyc] : p.faces)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            edge_faces[edge_key(cyc[i], cyc[(i + 1) % cyc.size()])].push_back(id);
    std::map<std::pair<std::string, std::string>, EdgeKey> adj;
    for (auto& [e, fs] : edge_faces)
        if (fs.size() == 2) {
            std::sort(fs.begin(), fs.end());
            adj[{fs[0], fs[1]}] = e;
        }
    return adj;
}

struct AndreevItem {
    std::string condition; // "m0".."m5"
    bool pass;
    std::string witness; // offending element, empty when passing
};

struct AndreevReport {
    std::vector<AndreevItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::vector<std::string> failing() const {
        std::set<std::string> s;
        for (const auto& it : items)
            if (!it.pass) s.insert(it.condition);
        return {s.begin(), s.end()};
    }
};

namespace detail {

// prismatic circuits of length 3 and 4: consecutive faces adjacent,
// non-consecutive not, and no vertex common to three of them
inline std::vector<std::vector<std::string>> prismatic_circuits(const CombPolyhedron& p, int k) {
    std::vector<std::string> ids;
    for (const auto& [id, cyc] : p.faces) ids.push_back(id);
    auto adj = face_adjacency(p);
    auto adjacent = [&](const std::string& a, const std::string& b) {
        return adj.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
    };
    auto fv = faces_at_vertices(p);
    auto no_triple_vertex = [&](const std::vector<std::string>& c) {
        for (const auto& [v, fs] : fv) {
            int cnt = 0;
            for (const auto& f : c)
                if (std::find(fs.begin(), fs.end(), f) != fs.end()) ++cnt;
            if (cnt >= 3) return false;
        }
        return true;
    };

    std::vector<std::vector<std::string>> out;
    const std::size_t n = ids.size();
    if (k == 3) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c) {
                    std::vector<std::string> t{ids[a], ids[b], ids[c]};
                    if (adjacent(t[0], t[1]) && adjacent(t[1], t[2]) && adjacent(t[0], t[2]) &&
                        no_triple_vertex(t))
                        out.push_back(t);
                }
    } else if (k == 4) {
        // unordered 4-sets, then try the three pairings into a cycle
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d) {
                        const std::string &A = ids[a], &B = ids[b], &C = ids[c], &D = ids[d];
                        std::vector<std::vector<std::string>> orders = {
                            {A, B, C, D}, {A, B, D, C}, {A, C, B, D}};
                        for (auto& o : orders) {
                            bool cyc = adjacent(o[0], o[1]) && adjacent(o[1], o[2]) &&
                                       adjacent(o[2], o[3]) && adjacent(o[3], o[0]) &&
                                       !adjacent(o[0], o[2]) && !adjacent(o[1], o[3]);
                            if (cyc && no_triple_vertex(o)) out.push_back(o);
                        }
                    }
    }
    return out;
}

inline std::optional<std::pair<std::string, std::string>> triangular_prism_bases(
    const CombPolyhedron& p) {
    if (p.faces.size() != 5) return std::nullopt;
    std::vector<std::string> tris;
    for (const auto& [id, cyc] : p.faces)
        if (cyc.size() == 3) tris.push_back(id);
    if (tris.size() != 2) return std::nullopt;
    auto adj = face_adjacency(p);
    auto key = tris[0] < tris[1] ? std::make_pair(tris[0], tris[1]) : std::make_pair(tris[1], tris[0]);
    if (adj.count(key)) return std::nullopt;
    return std::make_pair(tris[0], tris[1]);
}

} // namespace detail

inline AndreevReport andreev_check(const CombPolyhedron& p) {
    AndreevReport r;
    auto adj = face_adjacency(p);
    auto angle_of_pair = [&](const std::string& a, const std::string& b) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        return Rat(1, angle_label(p, adj.at(key)));
    };

    // m0: labels >= 2 means 0 < pi/m <= pi/2, true by typing
    r.items.push_back({"m0", true, ""});

    // m1: vertex angle sums
    {
        bool ok = true;
        std::string w;
        for (VertexId v : vertex_set(p)) {
            auto es = edges_at_vertex(p, v);
            if (es.size() == 3) {
                if (angle_sum_at(p, v) < 1) {
                    ok = false;
                    w = "vertex " + std::to_string(v);
                    break;
                }
            } else {
                if (angle_sum_at(p, v) != 2) {
                    ok = false;
                    w = "vertex " + std::to_string(v);
                    break;
                }
            }
        }
        r.items.push_back({"m1", ok, w});
    }

    // m2: prismatic 3-circuits, angle sum < pi
    {
        bool ok = true;
        std::string w;
        for (const auto& c : detail::prismatic_circuits(p, 3)) {
            Rat s = angle_of_pair(c[0], c[1]) + angle_of_pair(c[1], c[2]) + angle_of_pair(c[0], c[2]);
            if (!(s < 1)) {
                ok = false;
                w = "3-circuit " + c[0] + "," + c[1] + "," + c[2];
                break;
            }
        }
        r.items.push_back({"m2", ok, w});
    }

    // m3: prismatic 4-circuits, angle sum < 2 pi
    {
        bool ok = true;
        std::string w;
        for (const auto& c : detail::prismatic_circuits(p, 4)) {
            Rat s = angle_of_pair(c[0], c[1]) + angle_of_pair(c[1], c[2]) +
                    angle_of_pair(c[2], c[3]) + angle_of_pair(c[3], c[0]);
            if (!(s < 2)) {
                ok = false;
                w = "4-circuit " + c[0] + "," + c[1] + "," + c[2] + "," + c[3];
                break;
            }
        }
        r.items.push_back({"m3", ok, w});
    }

    // m4: triangular prism lateral sum < 3 pi
    {
        bool ok = true;
        std::string w;
        if (auto bases = detail::triangular_prism_bases(p)) {
            Rat s(0);
            for (const auto& [id, cyc] : p.faces) {
                if (id == bases->first || id == bases->second) continue;
                for (const auto& base : {bases->first, bases->second}) s += angle_of_pair(id, base);
            }
            if (!(s < 3)) {
                ok = false;
                w = "prism bases " + bases->first + "," + bases->second;
            }
        }
        r.items.push_back({"m4", ok, w});
    }

    // m5: F_i ~ F_j ~ F_k, F_i and F_k non-adjacent but concurrent in an
    // ideal vertex not on F_j: angles must sum below pi
    {
        bool ok = true;
        std::string w;
        auto fv = faces_at_vertices(p);
        auto adjacent = [&](const std::string& a, const std::string& b) {
            return adj.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
        };
        for (const auto& [v, fs] : fv) {
            auto kind = vertex_kind(p, v);
            if (kind != VertexKind::Ideal3 && kind != VertexKind::Ideal4) continue;
            for (std::size_t a = 0; a < fs.size() && ok; ++a)
                for (std::size_t b = 0; b < fs.size() && ok; ++b) {
                    if (a == b || adjacent(fs[a], fs[b])) continue;
                    // middle face adjacent to both, not through v
                    for (const auto& [jid, jcyc] : p.faces) {
                        if (jid == fs[a] || jid == fs[b]) continue;
                        if (!adjacent(fs[a], jid) || !adjacent(jid, fs[b])) continue;
                        if (std::find(jcyc.begin(), jcyc.end(), v) != jcyc.end()) continue;
                        Rat s = angle_of_pair(fs[a], jid) + angle_of_pair(jid, fs[b]);
                        if (!(s < 1)) {
                            ok = false;
                            w = "faces " + fs[a] + "," + jid + "," + fs[b] + " at ideal vertex " +
                                std::to_string(v);
                            break;
                        }
                    }
                }
            if (!ok) break;
        }
        r.items.push_back({"m5", ok, w});
    }

    return r;
}

// --- ridges ---------------------------------------------------------------

struct RidgeDescriptor {
    EdgeKey edge;
    int k1, k2, n, l1, l2;

    std::array<int, 5> type() const { return {k1, k2, n, l1, l2}; }

    friend bool operator==(const RidgeDescriptor& a, const RidgeDescriptor& b) {
        return a.edge == b.edge && a.type() == b.type();
    }
};

// lexicographically least under k1<->k2, l1<->l2, pair swap
inline RidgeDescriptor canonicalize(RidgeDescriptor d) {
    if (d.k1 > d.k2) std::swap(d.k1, d.k2);
    if (d.l1 > d.l2) std::swap(d.l1, d.l2);
    if (std::make_pair(d.l1, d.l2) < std::make_pair(d.k1, d.k2)) {
        std::swap(d.k1, d.l1);
        std::swap(d.k2, d.l2);
    }
    return d;
}

inline std::vector<RidgeDescriptor> find_ridges(const CombPolyhedron& p) {
    std::vector<RidgeDescriptor> out;
    auto adj = face_adjacency(p);
    std::map<EdgeKey, std::vector<std::string>> edge_faces;
    for (const auto& [pr, e] : adj) {
        edge_faces[e].push_back(pr.first);
        edge_faces[e].push_back(pr.second);
    }
    for (const auto& [e, fs] : edge_faces) {
        bool quad = true;
        for (const auto& f : fs)
            if (p.faces.at(f).size() < 4) quad = false;
        if (!quad) continue;

        auto side_labels = [&](VertexId v) -> std::optional<std::pair<int, int>> {
            auto es = edges_at_vertex(p, v);
            if (es.size() != 3) return std::nullopt;
            if (angle_sum_at(p, v) <= 1) return std::nullopt; // endpoint must be a compact vertex
            std::vector<int> other;
            for (const auto& x : es)
                if (x != e) other.push_back(angle_label(p, x));
            return std::make_pair(other[0], other[1]);
        };
        auto kv = side_labels(e.first);
        auto lv = side_labels(e.second);
        if (!kv || !lv) continue;
        RidgeDescriptor d{e, kv->first, kv->second, angle_label(p, e), lv->first, lv->second};
        out.push_back(canonicalize(d));
    }
    return out;
}

// --- contraction / insertion ----------------------------------------------

struct NotContractible : std::domain_error {
    explicit NotContractible(const std::string& w) : std::domain_error("NotContractible: " + w) {}
};

struct AndreevFailure : std::domain_error {
    explicit AndreevFailure(const std::string& w) : std::domain_error("AndreevFailure: " + w) {}
};

struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& w) : std::logic_error("InternalInconsistency: " + w) {}
};

// Collapse a <2,2,n,2,2> ridge to a 4-valent ideal vertex. The merged
// vertex takes the smaller endpoint id, so that insert_edge followed by
// contract_ridge is the literal identity on the data.
inline CombPolyhedron contract_ridge(const CombPolyhedron& p, EdgeKey e) {
    e = edge_key(e.first, e.second);
    std::optional<RidgeDescriptor> found;
    for (const auto& d : find_ridges(p))
        if (d.edge == e) found = d;
    if (!found) throw NotContractible("edge " + detail::edge_name(e) + " is not a ridge");
    if (found->k1 != 2 || found->k2 != 2 || found->l1 != 2 || found->l2 != 2)
        throw NotContractible("ridge at " + detail::edge_name(e) + " is not of type <2,2,n,2,2>");

    VertexId keep = e.first, drop = e.second;
    CombPolyhedron q;
    for (const auto& [id, cyc] : p.faces) {
        std::vector<VertexId> nc;
        for (VertexId v : cyc) nc.push_back(v == drop ? keep : v);
        // the two faces along e now repeat `keep`; collapse the repeat
        std::vector<VertexId> out;
        for (VertexId v : nc)
            if (out.empty() || out.back() != v) out.push_back(v);
        if (out.size() > 1 && out.front() == out.back()) out.pop_back();
        q.faces[id] = std::move(out);
    }
    for (const auto& [k, m] : p.angles) {
        if (k == e) continue;
        EdgeKey nk = edge_key(k.first == drop ? keep : k.first, k.second == drop ? keep : k.second);
        q.angles[nk] = m;
    }

    auto rep = validate(q);
    if (!rep.ok()) throw InternalInconsistency("contraction result invalid: " + rep.errors.front());
    auto ar = andreev_check(q);
    if (!ar.all_pass())
        throw InternalInconsistency("contraction result fails " + ar.failing().front());
    return q;
}

// Cyclic order of the four faces around a 4-valent vertex, derived from
// shared edges at the vertex.
inline std::vector<std::string> faces_around_ideal_vertex(const CombPolyhedron& p, VertexId v) {
    auto fv = faces_at_vertices(p);
    auto it = fv.find(v);
    if (it == fv.end() || it->second.size() != 4)
        throw std::domain_error("faces_around_ideal_vertex: not a 4-valent vertex");
    auto fs = it->second;
    std::sort(fs.begin(), fs.end());
    auto adj = face_adjacency(p);
    auto edges_v = edges_at_vertex(p, v);
    auto share_edge_at_v = [&](const std::string& a, const std::string& b) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto jt = adj.find(key);
        if (jt == adj.end()) return false;
        return std::find(edges_v.begin(), edges_v.end(), jt->second) != edges_v.end();
    };
    std::vector<std::string> cyc{fs[0]};
    std::set<std::string> used{fs[0]};
    while (cyc.size() < 4) {
        bool advanced = false;
        for (const auto& f : fs)
            if (!used.count(f) && share_edge_at_v(cyc.back(), f)) {
                cyc.push_back(f);
                used.insert(f);
                advanced = true;
                break;
            }
        if (!advanced) throw std::domain_error("faces_around_ideal_vertex: faces do not form a 4-cycle");
    }
    if (!share_edge_at_v(cyc.back(), cyc.front()))
        throw std::domain_error("faces_around_ideal_vertex: faces do not close a 4-cycle");
    return cyc;
}

// Split an ideal 4-valent vertex into a labelled edge. With cyclic face
// order (A,B,C,D) around v, mode 1 puts the new edge on faces B and D,
// mode 2 on A and C. The vertex keeps its id on one side; the other
// side gets a fresh id.
inline CombPolyhedron insert_edge(const CombPolyhedron& p, VertexId v, int mode, int n,
                                  bool check_andreev = true) {
    if (mode != 1 && mode != 2) throw std::invalid_argument("insert_edge: mode must be 1 or 2");
    if (n < 2) throw std::invalid_argument("insert_edge: label must be >= 2");
    if (vertex_kind(p, v) != VertexKind::Ideal4)
        throw std::domain_error("insert_edge: vertex " + std::to_string(v) + " is not ideal 4-valent");

    auto cyc4 = faces_around_ideal_vertex(p, v);
    // rotate so that the faces gaining the new edge sit at odd positions
    std::string A = cyc4[0], B = cyc4[1], C = cyc4[2], D = cyc4[3];
    if (mode == 2) {
        A = cyc4[1];
        B = cyc4[2];
        C = cyc4[3];
        D = cyc4[0];
    }
    // endpoints: vertex `a` stays incident to A (and B, D); vertex `c` to C
    VertexId a = v;
    VertexId c = *vertex_set(p).rbegin() + 1;

    CombPolyhedron q = p;
    // A keeps v; C gets c; B and D see v replaced by the pair (order by
    // the local geometry: the new edge lies between them)
    for (auto& vtx : q.faces.at(C))
        if (vtx == v) vtx = c;
    auto splice = [&](const std::string& fid) {
        auto& cycf = q.faces.at(fid);
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < cycf.size(); ++i) {
            if (cycf[i] != v) {
                out.push_back(cycf[i]);
                continue;
            }
            // neighbors of v in this face decide the order of (a, c):
            // the side adjacent to face A keeps a
            VertexId prev = cycf[(i + cycf.size() - 1) % cycf.size()];
            const auto& acyc = q.faces.at(A);
            bool prev_on_a = std::find(acyc.begin(), acyc.end(), prev) != acyc.end();
            if (prev_on_a) {
                out.push_back(a);
                out.push_back(c);
            } else {
                out.push_back(c);
                out.push_back(a);
            }
        }
        cycf = std::move(out);
    };
    splice(B);
    splice(D);

    // relabel the angle map: the two old edges on C's side now end at c,
    // recognizable as neighbors of c along C's new boundary
    std::map<EdgeKey, int> na;
    for (const auto& [k, m] : p.angles) {
        EdgeKey nk = k;
        if (k.first == v || k.second == v) {
            VertexId other = (k.first == v) ? k.second : k.first;
            const auto& cc = q.faces.at(C);
            for (std::size_t i = 0; i < cc.size(); ++i) {
                VertexId x = cc[i], yv = cc[(i + 1) % cc.size()];
                if ((x == c && yv == other) || (yv == c && x == other)) nk = edge_key(c, other);
            }
        }
        na[nk] = m;
    }
    na[edge_key(a, c)] = n;
    q.angles = std::move(na);

    auto rep = validate(q);
    if (!rep.ok()) throw InternalInconsistency("insertion result invalid: " + rep.errors.front());
    if (check_andreev) {
        auto ar = andreev_check(q);
        if (!ar.all_pass()) {
            std::string w;
            for (const auto& it : ar.items)
                if (!it.pass) w += (w.empty() ? "" : "; ") + it.condition + " at " + it.witness;
            throw AndreevFailure(w);
        }
    }
    return q;
}

// Smallest label in [lo, hi] for which insertion passes all conditions.
inline std::optional<int> smallest_insert_label(const CombPolyhedron& p, VertexId v, int mode,
                                                int lo, int hi) {
    for (int n = std::max(lo, 2); n <= hi; ++n) {
        try {
            insert_edge(p, v, mode, n);
            return n;
        } catch (const AndreevFailure&) {
        }
    }
    return std::nullopt;
}

// --- generators -----------------------------------------------------------

// Right-angled drum with two n-gons and 2n pentagons; L(5) is the
// combinatorial dodecahedron. Vertex layout: top cycle 1..n, upper ring
// n+1..2n, lower ring 2n+1..3n, bottom cycle 3n+1..4n.
inline CombPolyhedron gen_loebell(int n) {
    if (n < 5) throw std::invalid_argument("gen_loebell: n must be >= 5");
    CombPolyhedron p;
    auto a = [&](int i) { return 1 + ((i % n) + n) % n; };
    auto b = [&](int i) { return n + 1 + ((i % n) + n) % n; };
    auto c = [&](int i) { return 2 * n + 1 + ((i % n) + n) % n; };
    auto d = [&](int i) { return 3 * n + 1 + ((i % n) + n) % n; };

    std::vector<VertexId> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(a(i));
    for (int i = n - 1; i >= 0; --i) bottom.push_back(d(i)); // reversed for orientation
    p.faces["T"] = top;
    p.faces["B"] = bottom;
    for (int i = 0; i < n; ++i) {
        p.faces["U" + std::to_string(i + 1)] = {a(i + 1), a(i), b(i), c(i), b(i + 1)};
        p.faces["L" + std::to_string(i + 1)] = {d(i), d(i + 1), c(i + 1), b(i + 1), c(i)};
    }
    for (const auto& e : edge_set(p)) p.angles[e] = 2;
    return p;
}

// The spokes a_i - b_i and d_i - c_i form the contracted perfect matching.
inline std::vector<EdgeKey> loebell_matching(int n) {
    std::vector<EdgeKey> m;
    for (int i = 1; i <= n; ++i) m.push_back(edge_key(i, n + i));
    for (int i = 1; i <= n; ++i) m.push_back(edge_key(2 * n + i, 3 * n + i));
    return m;
}

inline CombPolyhedron gen_dodecahedron(int m) {
    if (m < 2) throw std::invalid_argument("gen_dodecahedron: label must be >= 2");
    CombPolyhedron p = gen_loebell(5);
    p.angles[edge_key(1, 6)] = m; // the spoke a_1 - b_1, both incident faces pentagons
    return p;
}

inline EdgeKey dodecahedron_marked_edge() { return edge_key(1, 6); }

// Drum with the perfect matching contracted: 2n ideal 4-valent vertices.
// Built directly; tests compare against sequential contraction of L(n).
inline CombPolyhedron gen_loebell_ideal(int n) {
    if (n < 3) throw std::invalid_argument("gen_loebell_ideal: n must be >= 3");
    CombPolyhedron p;
    // ids match what sequential contraction of L(n) leaves behind:
    // merged top spokes keep 1..n, merged bottom spokes keep 2n+1..3n
    auto z = [&](int i) { return 1 + ((i % n) + n) % n; };
    auto y = [&](int i) { return 2 * n + 1 + ((i % n) + n) % n; };
    std::vector<VertexId> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(z(i));
    for (int i = n - 1; i >= 0; --i) bottom.push_back(y(i));
    p.faces["T"] = top;
    p.faces["B"] = bottom;
    for (int i = 0; i < n; ++i) {
        p.faces["U" + std::to_string(i + 1)] = {z(i + 1), z(i), y(i)};
        p.faces["L" + std::to_string(i + 1)] = {y(i), y(i + 1), z(i + 1)};
    }
    for (const auto& e : edge_set(p)) p.angles[e] = 2;
    return p;
}

// Cube with three pairwise non-adjacent, non-coplanar essential edges.
inline CombPolyhedron gen_lambert_cube(int p_, int q_, int r_) {
    if (p_ < 3 || q_ < 3 || r_ < 3)
        throw std::invalid_argument("gen_lambert_cube: labels must be >= 3 for a compact cube");
    CombPolyhedron c;
    // vertices 1..8 = binary xyz + 1
    c.faces["Zlo"] = {1, 2, 4, 3};
    c.faces["Zhi"] = {5, 7, 8, 6};
    c.faces["Ylo"] = {1, 5, 6, 2};
    c.faces["Yhi"] = {3, 4, 8, 7};
    c.faces["Xlo"] = {1, 3, 7, 5};
    c.faces["Xhi"] = {2, 6, 8, 4};
    for (const auto& e : edge_set(c)) c.angles[e] = 2;
    c.angles[edge_key(1, 2)] = p_;
    c.angles[edge_key(3, 7)] = q_;
    c.angles[edge_key(6, 8)] = r_;
    return c;
}

// Dodecahedron with the three edges at one vertex labelled 3 (one ideal
// three-valent vertex).
inline CombPolyhedron gen_ideal3_dodecahedron() {
    CombPolyhedron p = gen_loebell(5);
    for (const auto& e : edges_at_vertex(p, 1)) p.angles[e] = 3;
    return p;
}

} // namespace coxgrowth
