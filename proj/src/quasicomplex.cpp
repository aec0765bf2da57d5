#include "sncdual/quasicomplex.hpp"

#include "sncdual/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace sncdual {

std::string Simplex::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ',';
        os << vertices[i];
    }
    if (tag != 0) os << ';' << tag;
    return os.str();
}

Simplex make_simplex(std::vector<VertexId> vertices, int tag) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex{std::move(vertices), tag};
}

QuasiComplex QuasiComplex::build(std::vector<CellSpec> cells) {
    QuasiComplex k;
    std::sort(cells.begin(), cells.end(),
              [](const CellSpec& a, const CellSpec& b) { return a.simplex < b.simplex; });
    for (auto& c : cells) {
        k.cells_.push_back(c.simplex);
        k.face_specs_.push_back(std::move(c.faces));
    }
    k.finalize();
    return k;
}

QuasiComplex QuasiComplex::simplicial(const std::vector<std::vector<VertexId>>& generators) {
    std::set<std::vector<VertexId>> closed;
    std::vector<std::vector<VertexId>> queue;
    for (auto g : generators) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (!g.empty() && closed.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
        auto s = queue.back();
        queue.pop_back();
        if (s.size() == 1) continue;
        for (size_t i = 0; i < s.size(); ++i) {
            auto f = s;
            f.erase(f.begin() + i);
            if (closed.insert(f).second) queue.push_back(f);
        }
    }
    std::vector<CellSpec> cells;
    for (const auto& s : closed) {
        CellSpec c{Simplex{s, 0}, {}};
        if (s.size() > 1)
            for (size_t i = 0; i < s.size(); ++i) {
                auto f = s;
                f.erase(f.begin() + i);
                c.faces.push_back(Simplex{f, 0});
            }
        cells.push_back(std::move(c));
    }
    return build(std::move(cells));
}

void QuasiComplex::finalize() {
    index_.clear();
    for (int i = 0; i < size(); ++i)
        index_.emplace(cells_[i], i);
    face_idx_.assign(size(), {});
    for (int i = 0; i < size(); ++i) {
        face_idx_[i].reserve(face_specs_[i].size());
        for (const auto& f : face_specs_[i]) {
            auto it = index_.find(f);
            face_idx_[i].push_back(it == index_.end() ? -1 : it->second);
        }
    }
    reach_.clear();
}

void QuasiComplex::ensure_reach() const {
    if (!reach_.empty() || cells_.empty()) return;
    reach_.assign(size(), std::vector<bool>(size(), false));
    // cells_ is sorted by vertex list, so faces (shorter lists) precede cofaces
    // only within equal prefixes; iterate in increasing dimension instead.
    std::vector<int> order(size());
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [this](int a, int b) { return cells_[a].dim() < cells_[b].dim(); });
    for (int i : order) {
        reach_[i][i] = true;
        for (int f : face_idx_[i]) {
            if (f < 0) continue;
            for (int j = 0; j < size(); ++j)
                if (reach_[f][j]) reach_[i][j] = true;
        }
    }
}

int QuasiComplex::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim());
    return d;
}

int QuasiComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

std::vector<VertexId> QuasiComplex::vertex_ids() const {
    std::set<VertexId> vs;
    for (const auto& c : cells_) vs.insert(c.vertices.begin(), c.vertices.end());
    return {vs.begin(), vs.end()};
}

int QuasiComplex::count_dim(int p) const {
    int n = 0;
    for (const auto& c : cells_)
        if (c.dim() == p) ++n;
    return n;
}

bool QuasiComplex::is_simplicial() const {
    for (int i = 0; i < size(); ++i) {
        if (cells_[i].tag != 0) return false;
        if (i + 1 < size() && cells_[i].vertices == cells_[i + 1].vertices) return false;
    }
    return true;
}

bool QuasiComplex::is_face_of(int a, int b) const {
    ensure_reach();
    return reach_[b][a];
}

bool QuasiComplex::operator==(const QuasiComplex& o) const {
    return cells_ == o.cells_ && face_specs_ == o.face_specs_;
}

ValidationReport validate_complex(const QuasiComplex& k) {
    ValidationReport rep;
    auto add = [&rep](const std::string& code, const std::string& msg) {
        rep.violations.push_back({code, msg});
    };
    bool structural_ok = true;
    for (int i = 0; i < k.size(); ++i) {
        const Simplex& s = k.simplex(i);
        if (s.vertices.empty()) {
            add("vertex-order", "simplex with empty vertex list");
            structural_ok = false;
            continue;
        }
        for (size_t j = 1; j < s.vertices.size(); ++j)
            if (!(s.vertices[j - 1] < s.vertices[j])) {
                add("vertex-order", "vertices of " + s.key() + " not strictly sorted");
                structural_ok = false;
            }
        if (i + 1 < k.size() && s == k.simplex(i + 1)) {
            add("duplicate-simplex", "duplicate simplex " + s.key());
            structural_ok = false;
        }
        const auto& specs = k.face_specs(i);
        size_t expected = s.dim() == 0 ? 0 : s.vertices.size();
        if (specs.size() != expected) {
            add("face-count", "simplex " + s.key() + " lists " + std::to_string(specs.size()) +
                                  " faces, expected " + std::to_string(expected));
            structural_ok = false;
            continue;
        }
        for (size_t f = 0; f < specs.size(); ++f) {
            auto want = s.vertices;
            want.erase(want.begin() + f);
            if (specs[f].vertices != want) {
                add("face-vertices", "face " + std::to_string(f) + " of " + s.key() +
                                         " has the wrong vertex set");
                structural_ok = false;
            }
            if (k.face_indices(i)[f] < 0) {
                add("face-closed", "face " + specs[f].key() + " of " + s.key() +
                                       " is not a member simplex");
                structural_ok = false;
            }
        }
    }
    if (!structural_ok) return rep;

    // Simplicial identities: deleting vertices i < j in either order reaches
    // the same cell.
    for (int c = 0; c < k.size(); ++c) {
        int p = k.simplex(c).dim();
        if (p < 2) continue;
        const auto& f = k.face_indices(c);
        for (int j = 1; j <= p; ++j)
            for (int i = 0; i < j; ++i) {
                int a = k.face_indices(f[j])[i];
                int b = k.face_indices(f[i])[j - 1];
                if (a != b)
                    add("face-consistency",
                        "faces " + std::to_string(i) + "," + std::to_string(j) + " of " +
                            k.simplex(c).key() + " do not commute");
            }
    }
    if (!rep.ok()) return rep;

    // Quasicomplex condition, by enumeration: the common faces of any two
    // cells form a face-closed family covered by its maximal members.
    for (int a = 0; a < k.size(); ++a)
        for (int b = a; b < k.size(); ++b) {
            std::vector<int> common;
            for (int i = 0; i < k.size(); ++i)
                if (k.is_face_of(i, a) && k.is_face_of(i, b)) common.push_back(i);
            for (int i : common)
                for (int f : k.face_indices(i))
                    if (std::find(common.begin(), common.end(), f) == common.end())
                        add("quasicomplex-condition",
                            "common faces of " + k.simplex(a).key() + " and " +
                                k.simplex(b).key() + " are not face-closed");
            for (int i : common) {
                bool covered = false;
                for (int m : common)
                    if (k.is_face_of(i, m)) { covered = true; break; }
                if (!covered)
                    add("quasicomplex-condition",
                        "common face " + k.simplex(i).key() + " of " + k.simplex(a).key() +
                            " and " + k.simplex(b).key() + " not under a maximal common face");
            }
        }
    return rep;
}

void require_valid(const QuasiComplex& k) {
    auto rep = validate_complex(k);
    if (!rep.ok())
        throw validation_error("invalid complex: " + rep.violations.front().code + ": " +
                               rep.violations.front().message);
}

namespace {

std::vector<int> star_indices(const QuasiComplex& k, int idx) {
    std::vector<int> out;
    for (int b = 0; b < k.size(); ++b)
        if (k.is_face_of(idx, b)) out.push_back(b);
    return out;
}

std::vector<int> closure_indices(const QuasiComplex& k, const std::vector<int>& set) {
    std::vector<bool> in(k.size(), false);
    for (int b : set)
        for (int i = 0; i < k.size(); ++i)
            if (k.is_face_of(i, b)) in[i] = true;
    std::vector<int> out;
    for (int i = 0; i < k.size(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

} // namespace

std::vector<Simplex> star(const QuasiComplex& k, const Simplex& sigma) {
    require_valid(k);
    int idx = k.find(sigma);
    if (idx < 0) throw not_found_error("simplex " + sigma.key() + " not in complex");
    std::vector<Simplex> out;
    for (int b : star_indices(k, idx)) out.push_back(k.simplex(b));
    return out;
}

QuasiComplex subcomplex(const QuasiComplex& k, const std::vector<int>& keep) {
    std::vector<CellSpec> cells;
    for (int i : keep) cells.push_back({k.cells_[i], k.face_specs_[i]});
    return QuasiComplex::build(std::move(cells));
}

QuasiComplex link(const QuasiComplex& k, const Simplex& sigma) {
    require_valid(k);
    int idx = k.find(sigma);
    if (idx < 0) throw not_found_error("simplex " + sigma.key() + " not in complex");
    auto st = star_indices(k, idx);
    auto cl = closure_indices(k, st);
    std::vector<bool> in_star(k.size(), false);
    for (int b : st) in_star[b] = true;
    std::vector<int> keep;
    for (int i : cl)
        if (!in_star[i]) keep.push_back(i);
    return subcomplex(k, keep);
}

VertexId fresh_vertex_id(const QuasiComplex& k, const Simplex& sigma) {
    auto used = k.vertex_ids();
    std::set<VertexId> taken(used.begin(), used.end());
    std::string base = "v(" + sigma.key() + ")";
    if (!taken.count(base)) return base;
    for (int gen = 2;; ++gen) {
        std::string name = base + "#" + std::to_string(gen);
        if (!taken.count(name)) return name;
    }
}

namespace {

// Connected components, under comparability, of the cells lying above both
// sigma and a base cell. Each component corresponds to one cone cell over the
// base in the subdivided complex.
struct ConeClasses {
    std::vector<std::vector<int>> members; // sorted member lists, one per class
    std::map<int, int> class_of;           // cell index -> class rank
};

ConeClasses cone_classes(const QuasiComplex& k, const std::vector<int>& star_set, int rho) {
    std::vector<int> m;
    for (int b : star_set)
        if (k.is_face_of(rho, b)) m.push_back(b);
    std::vector<int> parent(m.size());
    for (size_t i = 0; i < m.size(); ++i) parent[i] = int(i);
    std::function<int(int)> root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (k.is_face_of(m[i], m[j]) || k.is_face_of(m[j], m[i]))
                parent[root(int(i))] = root(int(j));
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < m.size(); ++i) groups[root(int(i))].push_back(m[i]);
    ConeClasses out;
    for (auto& [r, mem] : groups) out.members.push_back(std::move(mem));
    std::sort(out.members.begin(), out.members.end());
    for (int c = 0; c < int(out.members.size()); ++c)
        for (int x : out.members[c]) out.class_of.emplace(x, c);
    return out;
}

} // namespace

QuasiComplex stellar_subdivide(const QuasiComplex& k, const Simplex& sigma) {
    require_valid(k);
    int idx = k.find(sigma);
    if (idx < 0) throw not_found_error("simplex " + sigma.key() + " not in complex");

    auto st = star_indices(k, idx);
    std::vector<bool> in_star(k.size(), false);
    for (int b : st) in_star[b] = true;
    auto cl = closure_indices(k, st);
    std::vector<int> base; // cells of the closed star not containing sigma
    for (int i : cl)
        if (!in_star[i]) base.push_back(i);

    VertexId v = fresh_vertex_id(k, sigma);

    std::map<int, ConeClasses> classes;
    for (int rho : base) classes.emplace(rho, cone_classes(k, st, rho));

    // Tags for the cone cells: per vertex set, ordered by (base cell, class).
    std::map<std::pair<int, int>, Simplex> cone_cell;
    std::map<std::vector<VertexId>, int> next_tag;
    for (int rho : base) {
        auto verts = k.simplex(rho).vertices;
        verts.insert(std::lower_bound(verts.begin(), verts.end(), v), v);
        for (int c = 0; c < int(classes.at(rho).members.size()); ++c) {
            int& t = next_tag[verts];
            cone_cell.emplace(std::make_pair(rho, c), Simplex{verts, t++});
        }
    }

    std::vector<CellSpec> cells;
    for (int i = 0; i < k.size(); ++i)
        if (!in_star[i]) cells.push_back({k.simplex(i), k.face_specs(i)});
    cells.push_back({Simplex{{v}, 0}, {}});
    for (const auto& [key, cell] : cone_cell) {
        auto [rho, c] = key;
        CellSpec spec{cell, {}};
        int pos_v = int(std::lower_bound(cell.vertices.begin(), cell.vertices.end(), v) -
                        cell.vertices.begin());
        int rep = classes.at(rho).members[c].front();
        for (int j = 0; j < int(cell.vertices.size()); ++j) {
            if (j == pos_v) {
                spec.faces.push_back(k.simplex(rho));
                continue;
            }
            int jb = j < pos_v ? j : j - 1;
            if (k.simplex(rho).dim() == 0) {
                spec.faces.push_back(Simplex{{v}, 0});
            } else {
                int rho_f = k.face_indices(rho)[jb];
                int cf = classes.at(rho_f).class_of.at(rep);
                spec.faces.push_back(cone_cell.at({rho_f, cf}));
            }
        }
        cells.push_back(std::move(spec));
    }
    return QuasiComplex::build(std::move(cells));
}

QuasiComplex join_cone(const VertexId& v, const QuasiComplex& s) {
    require_valid(s);
    auto vs = s.vertex_ids();
    if (std::find(vs.begin(), vs.end(), v) != vs.end())
        throw validation_error("cone vertex " + v + " already occurs in the base complex");
    std::vector<CellSpec> cells;
    for (int i = 0; i < s.size(); ++i) cells.push_back({s.simplex(i), s.face_specs(i)});
    cells.push_back({Simplex{{v}, 0}, {}});
    for (int i = 0; i < s.size(); ++i) {
        const Simplex& b = s.simplex(i);
        auto verts = b.vertices;
        verts.insert(std::lower_bound(verts.begin(), verts.end(), v), v);
        CellSpec spec{Simplex{verts, b.tag}, {}};
        int pos_v = int(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        for (int j = 0; j < int(verts.size()); ++j) {
            if (j == pos_v) {
                spec.faces.push_back(b);
                continue;
            }
            int jb = j < pos_v ? j : j - 1;
            if (b.dim() == 0) {
                spec.faces.push_back(Simplex{{v}, 0});
            } else {
                const Simplex& bf = s.simplex(s.face_indices(i)[jb]);
                auto fverts = bf.vertices;
                fverts.insert(std::lower_bound(fverts.begin(), fverts.end(), v), v);
                spec.faces.push_back(Simplex{fverts, bf.tag});
            }
        }
        cells.push_back(std::move(spec));
    }
    return QuasiComplex::build(std::move(cells));
}

long euler_characteristic(const QuasiComplex& k) {
    long chi = 0;
    for (int i = 0; i < k.size(); ++i) chi += (k.simplex(i).dim() % 2 == 0) ? 1 : -1;
    return chi;
}

QuasiComplex disjoint_union(const QuasiComplex& a, const QuasiComplex& b) {
    auto va = a.vertex_ids(), vb = b.vertex_ids();
    std::vector<VertexId> shared;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    if (!shared.empty())
        throw validation_error("disjoint_union: shared vertex " + shared.front());
    std::vector<CellSpec> cells;
    for (int i = 0; i < a.size(); ++i) cells.push_back({a.simplex(i), a.face_specs(i)});
    for (int i = 0; i < b.size(); ++i) cells.push_back({b.simplex(i), b.face_specs(i)});
    return QuasiComplex::build(std::move(cells));
}

QuasiComplex relabel(const QuasiComplex& k, const std::map<VertexId, VertexId>& mapping) {
    auto rename = [&mapping](const Simplex& s) {
        std::vector<VertexId> verts;
        for (const auto& v : s.vertices) verts.push_back(mapping.at(v));
        std::sort(verts.begin(), verts.end());
        return Simplex{verts, s.tag};
    };
    // Face order follows sorted vertex positions, so face lists are permuted
    // along with the vertices.
    std::vector<CellSpec> cells;
    for (int i = 0; i < k.size(); ++i) {
        const Simplex& s = k.simplex(i);
        CellSpec spec{rename(s), {}};
        if (s.dim() >= 1) {
            std::vector<std::pair<VertexId, int>> order;
            for (int j = 0; j < int(s.vertices.size()); ++j)
                order.push_back({mapping.at(s.vertices[j]), j});
            std::sort(order.begin(), order.end());
            for (const auto& [nv, old_j] : order)
                spec.faces.push_back(rename(k.face_specs(i)[old_j]));
        }
        cells.push_back(std::move(spec));
    }
    return QuasiComplex::build(std::move(cells));
}

std::string complex_to_json(const QuasiComplex& k, bool pretty) {
    require_valid(k);
    nlohmann::ordered_json j;
    j["vertices"] = k.vertex_ids();
    j["simplices"] = nlohmann::ordered_json::array();
    for (int i = 0; i < k.size(); ++i) {
        nlohmann::ordered_json cell;
        cell["vertices"] = k.simplex(i).vertices;
        cell["tag"] = k.simplex(i).tag;
        cell["faces"] = k.face_indices(i);
        j["simplices"].push_back(std::move(cell));
    }
    return pretty ? j.dump(2) : j.dump();
}

QuasiComplex complex_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("complex JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
        throw validation_error("complex JSON: missing simplices array");
    std::vector<Simplex> listed;
    for (const auto& cell : j["simplices"]) {
        Simplex s;
        s.vertices = cell.at("vertices").get<std::vector<std::string>>();
        s.tag = cell.value("tag", 0);
        listed.push_back(std::move(s));
    }
    std::vector<CellSpec> cells;
    for (size_t i = 0; i < listed.size(); ++i) {
        CellSpec spec{listed[i], {}};
        const auto& cell = j["simplices"][i];
        if (cell.contains("faces"))
            for (const auto& f : cell["faces"]) {
                size_t fi = f.get<size_t>();
                if (fi >= listed.size())
                    throw validation_error("complex JSON: face index out of range");
                spec.faces.push_back(listed[fi]);
            }
        cells.push_back(std::move(spec));
    }
    return QuasiComplex::build(std::move(cells));
}

} // namespace sncdual
