#include "ghom/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "ghom/errors.hpp"

namespace ghom {

Json matrix_to_json(const SparseMat& m) {
    SparseMat c = m;
    c.compact();
    Json j;
    j["rows"] = c.rows();
    j["cols"] = c.cols();
    Json entries = Json::array();
    for (const auto& e : c.entries()) entries.push_back({e.row, e.col, e.val.str()});
    j["entries"] = std::move(entries);
    return j;
}

SparseMat matrix_from_json(const Json& j) {
    require(j.contains("rows") && j.contains("cols"), Errc::BadInput, "matrix needs rows/cols");
    SparseMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.value("entries", Json::array())) {
        require(e.is_array() && e.size() == 3, Errc::BadInput, "matrix entry must be [i,j,value]");
        int row = e.at(0).get<int>();
        int col = e.at(1).get<int>();
        require(0 <= row && row < m.rows() && 0 <= col && col < m.cols(), Errc::BadInput,
                "matrix entry out of bounds");
        m.add(row, col, Int(e.at(2).get<std::string>()));
    }
    m.compact();
    return m;
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order;
    j["identity"] = g.identity;
    j["table"] = g.table;
    if (!g.labels.empty()) j["labels"] = g.labels;
    if (!g.name.empty()) j["name"] = g.name;
    return j;
}

GroupPtr group_from_json(const Json& j) {
    require(j.contains("table"), Errc::BadInput, "group needs a table");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    GroupPtr g = group_from_table(std::move(table), std::move(labels), j.value("name", ""));
    if (j.contains("order"))
        require(j.at("order").get<int>() == g->order, Errc::BadInput, "order field mismatch");
    if (j.contains("identity"))
        require(j.at("identity").get<int>() == g->identity, Errc::BadInput,
                "identity field mismatch");
    return g;
}

namespace {

Json ring_to_json(const Ring& r) {
    Json j;
    switch (r.kind) {
        case RingKind::Z: j["ring"] = "Z"; break;
        case RingKind::Q: j["ring"] = "Q"; break;
        case RingKind::Fp:
            j["ring"] = "Fp";
            j["p"] = r.p;
            break;
    }
    return j;
}

Ring ring_from_json(const Json& j) {
    std::string r = j.at("ring").get<std::string>();
    if (r == "Z") return Ring::integers();
    if (r == "Q") return Ring::rationals();
    if (r == "Fp") return Ring::mod(j.at("p").get<int64_t>());
    return parse_ring(r);
}

}  // namespace

Json module_to_json(const GModule& m) {
    Json j = ring_to_json(m.ring);
    j["rank"] = m.rank;
    Json action = Json::object();
    for (int e = 0; e < int(m.action.size()); ++e) {
        if (e == m.group->identity) continue;  // implied
        action[std::to_string(e)] = matrix_to_json(SparseMat::from_dense(m.action[e]));
    }
    j["action"] = std::move(action);
    if (!m.name.empty()) j["name"] = m.name;
    return j;
}

GModule module_from_json(const Json& j, const GroupPtr& g) {
    GModule m;
    m.group = g;
    m.ring = ring_from_json(j);
    m.rank = j.at("rank").get<int>();
    m.action.assign(g->order, DenseMat::identity(m.rank));
    for (auto it = j.at("action").begin(); it != j.at("action").end(); ++it) {
        int e = std::stoi(it.key());
        require(0 <= e && e < g->order, Errc::BadInput, "action key out of range");
        SparseMat s = matrix_from_json(it.value());
        require(s.rows() == m.rank && s.cols() == m.rank, Errc::ShapeMismatch,
                "action matrix shape");
        m.action[e] = s.dense();
        if (m.ring.kind == RingKind::Fp) m.action[e].mod_inplace(m.ring.p);
    }
    m.name = j.value("name", "file-module");
    validate_module(m);
    return m;
}

Json complex_to_json(const ChainComplex& c) {
    Json j = ring_to_json(c.ring);
    j["ranks"] = c.ranks;
    Json ds = Json::array();
    for (int k = 1; k <= c.top_degree(); ++k) ds.push_back(matrix_to_json(c.d[k]));
    j["differentials"] = std::move(ds);
    if (!c.labels.empty()) j["labels"] = c.labels;
    return j;
}

ChainComplex complex_from_json(const Json& j) {
    ChainComplex c;
    c.ring = ring_from_json(j);
    c.ranks = j.at("ranks").get<std::vector<int>>();
    require(!c.ranks.empty(), Errc::BadInput, "complex needs at least degree 0");
    c.d.resize(c.ranks.size());
    c.d[0] = SparseMat(0, c.ranks[0]);
    const auto& ds = j.at("differentials");
    require(int(ds.size()) == c.top_degree(), Errc::ShapeMismatch,
            "one differential per positive degree");
    for (int k = 1; k <= c.top_degree(); ++k) c.d[k] = matrix_from_json(ds.at(k - 1));
    if (j.contains("labels")) c.labels = j.at("labels").get<std::vector<std::vector<std::string>>>();
    c.validate();
    return c;
}

Json filtered_to_json(const FilteredComplex& f) {
    Json j = complex_to_json(f.cx);
    j["filtration"] = f.level;
    return j;
}

FilteredComplex filtered_from_json(const Json& j) {
    FilteredComplex f;
    f.cx = complex_from_json(j);
    f.level = j.at("filtration").get<std::vector<std::vector<int>>>();
    f.validate();
    return f;
}

Json finab_to_json(const FinAbGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank;
    Json t = Json::array();
    for (const Int& x : g.torsion) t.push_back(x.str());
    j["torsion"] = std::move(t);
    return j;
}

FinAbGroup finab_from_json(const Json& j) {
    FinAbGroup g;
    g.free_rank = j.at("free_rank").get<int>();
    for (const auto& t : j.value("torsion", Json::array())) g.torsion.push_back(Int(t.get<std::string>()));
    return g;
}

Json homology_result_to_json(const HomologyResult& r) {
    Json j = ring_to_json(r.ring);
    j["kind"] = r.cohomology ? "cohomology" : "homology";
    if (r.group) j["group"] = r.group->name;
    j["coefficients"] = r.coeff_name;
    j["max_degree"] = r.max_degree;
    Json degs = Json::array();
    for (const auto& g : r.groups) degs.push_back(finab_to_json(g));
    j["degrees"] = std::move(degs);
    Json pretty = Json::array();
    for (int k = 0; k <= r.max_degree; ++k) pretty.push_back(r.degree_str(k));
    j["display"] = std::move(pretty);
    return j;
}

Json pages_to_json(const std::vector<SSPage>& pages) {
    Json out = Json::array();
    for (const auto& pg : pages) {
        Json j;
        j["page"] = pg.r;
        if (!pg.dim.empty()) {
            j["dims"] = pg.dim;
        } else {
            Json rows = Json::array();
            for (const auto& col : pg.groups) {
                Json qs = Json::array();
                for (const auto& g : col) qs.push_back(finab_to_json(g));
                rows.push_back(std::move(qs));
            }
            j["entries"] = std::move(rows);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string pages_to_grid(const std::vector<SSPage>& pages) {
    std::ostringstream os;
    for (const auto& pg : pages) {
        os << "page E^" << pg.r << "\n";
        const bool field = !pg.dim.empty();
        const int np = field ? int(pg.dim.size()) : int(pg.groups.size());
        int nq = 0;
        for (int p = 0; p < np; ++p)
            nq = std::max(nq, field ? int(pg.dim[p].size()) : int(pg.groups[p].size()));
        std::vector<std::vector<std::string>> cells(nq, std::vector<std::string>(np, "."));
        size_t width = 1;
        for (int p = 0; p < np; ++p) {
            const int qmax = field ? int(pg.dim[p].size()) : int(pg.groups[p].size());
            for (int q = 0; q < qmax; ++q) {
                std::string s = field ? std::to_string(pg.dim[p][q]) : pg.groups[p][q].str();
                if (s == "0") s = ".";
                cells[q][p] = s;
                width = std::max(width, s.size());
            }
        }
        for (int q = nq - 1; q >= 0; --q) {
            os << "  q=" << q << " |";
            for (int p = 0; p < np; ++p) {
                os << ' ';
                os << std::string(width - cells[q][p].size(), ' ') << cells[q][p];
            }
            os << "\n";
        }
        os << "      +" << std::string((width + 1) * np, '-') << "  (p = 0.."
           << np - 1 << ")\n";
    }
    return os.str();
}

std::string canonical_dump(const Json& j) { return j.dump(); }

uint64_t content_hash(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), Errc::BadInput, "cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::vector<std::string> split_top_level(const std::string& s) {
    // split on commas; a trailing ",<digits>" belongs to gl:n,q style specs
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

GroupPtr parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (head == "zmod") return cyclic_group(std::stoi(rest));
        if (head == "sym") {
            int n = std::stoi(rest);
            require(n <= 4, Errc::TooLarge, "sym:n supports n <= 4");
            return symmetric_group(n);
        }
        if (head == "dihedral") return dihedral_group(std::stoi(rest));
        if (head == "gl") {
            auto parts = split_top_level(rest);
            require(parts.size() == 2, Errc::BadInput, "gl:n,q needs two arguments");
            return general_linear_group(std::stoi(parts[0]), std::stoll(parts[1])).group;
        }
        if (head == "product") {
            // find the split point at which both halves parse
            auto parts = split_top_level(rest);
            require(parts.size() >= 2, Errc::BadInput, "product:a,b needs two specs");
            for (size_t cut = 1; cut < parts.size(); ++cut) {
                std::string left = parts[0], right = parts[cut];
                for (size_t i = 1; i < cut; ++i) left += "," + parts[i];
                for (size_t i = cut + 1; i < parts.size(); ++i) right += "," + parts[i];
                try {
                    GroupPtr a = parse_group_spec(left);
                    GroupPtr b = parse_group_spec(right);
                    return product_group(a, b);
                } catch (const Error&) {
                    continue;
                } catch (const std::exception&) {
                    continue;
                }
            }
            fail(Errc::BadInput, "cannot split product spec: " + spec);
        }
        if (head == "file") return group_from_json(load_json_file(rest));
        if (head == "trivial" || spec == "1") return cyclic_group(1);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::BadInput, "bad group spec '" + spec + "': " + e.what());
    }
    fail(Errc::BadInput, "unknown group spec: " + spec);
}

GModule parse_coeff_spec(const std::string& spec, const GroupPtr& g) {
    if (spec == "Z") return trivial_module(g, Ring::integers());
    if (spec == "Q") return trivial_module(g, Ring::rationals());
    if (!spec.empty() && spec[0] == 'F' && spec.find(':') == std::string::npos)
        return trivial_module(g, parse_ring(spec));
    if (spec == "regular") return permutation_module(regular_action(g), Ring::integers());
    if (spec.rfind("file:", 0) == 0) {
        Json j = load_json_file(spec.substr(5));
        return module_from_json(j, g);
    }
    fail(Errc::BadInput, "unknown coefficient spec: " + spec);
}

}  // namespace ghom
