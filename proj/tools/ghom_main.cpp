#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ghom/errors.hpp"
#include "ghom/gradedalg.hpp"
#include "ghom/homology.hpp"
#include "ghom/jsonio.hpp"
#include "ghom/smith.hpp"
#include "ghom/spectral.hpp"
#include "ghom/stability.hpp"
#include "ghom/verify.hpp"

namespace {

using ghom::Json;

constexpr const char* kVersion = "ghom 0.1.0";

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
        } else {
            std::ofstream out(path);
            ghom::require(bool(out), ghom::Errc::BadInput, "cannot write " + path);
            out << text;
            if (text.empty() || text.back() != '\n') out << '\n';
        }
    }
    void write_json(const Json& j) const { write(j.dump(2)); }
};

std::string cache_dir_from(const std::string& flag) {
    if (!flag.empty()) return flag;
    const char* env = std::getenv("GHOM_CACHE_DIR");
    return env ? env : "";
}

/// Returns the cached payload for `key` or runs `compute`, storing the result.
Json cached(const std::string& cache_dir, const std::string& key,
            const std::function<Json()>& compute) {
    if (cache_dir.empty()) return compute();
    std::filesystem::create_directories(cache_dir);
    std::filesystem::path file =
        std::filesystem::path(cache_dir) / (std::to_string(ghom::content_hash(key)) + ".json");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        Json j;
        in >> j;
        return j;
    }
    Json j = compute();
    std::ofstream out(file);
    out << ghom::canonical_dump(j);
    return j;
}

std::vector<int> parse_subgroup(const ghom::GroupPtr& g, const std::string& spec) {
    if (spec.rfind("elements:", 0) == 0) {
        std::vector<int> elems;
        std::string rest = spec.substr(9);
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) elems.push_back(std::stoi(tok));
        return elems;
    }
    if (spec.rfind("order:", 0) == 0) {
        int target = std::stoi(spec.substr(6));
        // unique normal subgroup of that order, if any
        std::vector<std::vector<int>> found;
        std::vector<std::vector<int>> candidates;
        // enumerate subgroups generated by element subsets greedily: for the
        // small orders here, closures of single elements and pairs suffice
        std::set<std::vector<int>> seen;
        for (int a = 0; a < g->order; ++a)
            for (int b = a; b < g->order; ++b) {
                auto s = ghom::subgroup_closure(*g, {a, b});
                if (int(s.size()) == target && seen.insert(s).second &&
                    ghom::is_normal(*g, s))
                    found.push_back(s);
            }
        ghom::require(!found.empty(), ghom::Errc::NotASubgroup,
                      "no normal subgroup of order " + std::to_string(target));
        ghom::require(found.size() == 1, ghom::Errc::BadInput,
                      "normal subgroup of order " + std::to_string(target) + " is not unique");
        return found[0];
    }
    ghom::fail(ghom::Errc::BadInput, "subgroup spec must be elements:... or order:k");
}

std::string homology_table(const ghom::HomologyResult& r) {
    std::ostringstream os;
    os << (r.cohomology ? "cohomology" : "homology") << " of " << (r.group ? r.group->name : "?")
       << " with coefficients " << r.coeff_name << "\n";
    for (int k = 0; k <= r.max_degree; ++k)
        os << "  " << (r.cohomology ? "H^" : "H_") << k << " = " << r.degree_str(k) << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological algebra for finite groups"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int64_t caps = ghom::kDefaultCap;
    std::string cache_flag;
    app.add_option("--caps", caps, "basis-count cap for resolutions and tuple spaces");
    app.add_option("--cache-dir", cache_flag, "result cache directory (or GHOM_CACHE_DIR)");

    // ---- group ----------------------------------------------------------
    auto* group_cmd = app.add_subcommand("group", "group constructors");
    auto* gl_cmd = group_cmd->add_subcommand("gl", "general linear group over a prime field");
    int gl_n = 2;
    int64_t gl_q = 2;
    std::string gl_out;
    gl_cmd->add_option("--n", gl_n, "dimension")->required();
    gl_cmd->add_option("--q", gl_q, "field size (prime)")->required();
    gl_cmd->add_option("--out", gl_out, "output file");
    auto* mk_cmd = group_cmd->add_subcommand("make", "group from a builtin specifier");
    std::string mk_spec, mk_out;
    mk_cmd->add_option("--spec", mk_spec, "zmod:n | sym:n | dihedral:n | gl:n,q | product:a,b | file:path")
        ->required();
    mk_cmd->add_option("--out", mk_out, "output file");

    // ---- homology ---------------------------------------------------------
    auto* hom_cmd = app.add_subcommand("homology", "group (co)homology");
    std::string hom_group, hom_coeff = "Z", hom_out, hom_format = "json";
    int hom_deg = 3;
    bool hom_co = false;
    hom_cmd->add_option("--group", hom_group, "group specifier")->required();
    hom_cmd->add_option("--coeff", hom_coeff, "Z | Q | F<p> | regular | file:module.json");
    hom_cmd->add_option("--max-degree", hom_deg, "top degree");
    hom_cmd->add_flag("--cohomology", hom_co, "compute cohomology instead");
    hom_cmd->add_option("--out", hom_out, "output file");
    hom_cmd->add_option("--format", hom_format, "json | table");

    // ---- smith ------------------------------------------------------------
    auto* smith_cmd = app.add_subcommand("smith", "Smith normal form of a matrix file");
    std::string smith_in, smith_out;
    smith_cmd->add_option("--in", smith_in, "matrix JSON")->required();
    smith_cmd->add_option("--out", smith_out, "output file");

    // ---- cartan -------------------------------------------------------------
    auto* cartan_cmd = app.add_subcommand("cartan", "expected vs computed homology dimensions");
    std::string cartan_p = "2";
    int cartan_d = 1, cartan_deg = 4;
    cartan_cmd->add_option("--p", cartan_p, "prime, or Q");
    cartan_cmd->add_option("--dim", cartan_d, "vector space dimension");
    cartan_cmd->add_option("--max-degree", cartan_deg, "top degree");

    // ---- ss ----------------------------------------------------------------
    auto* ss_cmd = app.add_subcommand("ss", "spectral sequences");
    auto* pages_cmd = ss_cmd->add_subcommand("pages", "pages of a filtered complex");
    std::string pages_in, pages_ring, pages_format = "grid", pages_out;
    int pages_max = 5;
    pages_cmd->add_option("--in", pages_in, "filtered complex JSON")->required();
    pages_cmd->add_option("--ring", pages_ring, "override ring (F2, F3, Z)");
    pages_cmd->add_option("--max-page", pages_max, "last page to compute");
    pages_cmd->add_option("--format", pages_format, "grid | json");
    pages_cmd->add_option("--out", pages_out, "output file");
    auto* lhs_cmd = ss_cmd->add_subcommand("lhs", "E2 table for a normal subgroup");
    std::string lhs_group, lhs_normal, lhs_coeff = "F2", lhs_out, lhs_format = "grid";
    int lhs_p = 3, lhs_q = 3;
    lhs_cmd->add_option("--group", lhs_group, "group specifier")->required();
    lhs_cmd->add_option("--normal", lhs_normal, "elements:i,j,... or order:k")->required();
    lhs_cmd->add_option("--coeff", lhs_coeff, "field coefficients (F<p>)");
    lhs_cmd->add_option("--max-p", lhs_p, "columns");
    lhs_cmd->add_option("--max-q", lhs_q, "rows");
    lhs_cmd->add_option("--format", lhs_format, "grid | json");
    lhs_cmd->add_option("--out", lhs_out, "output file");

    // ---- stability -----------------------------------------------------------
    auto* stab_cmd = app.add_subcommand("stability", "vector-space orbit machinery");
    auto* oc_cmd = stab_cmd->add_subcommand("orbit-complex", "simplicial complex on nonzero vectors");
    int oc_n = 1, oc_p = 2;
    int64_t oc_q = 2;
    std::string oc_out;
    oc_cmd->add_option("--n", oc_n, "n (group is GL_{n+1})")->required();
    oc_cmd->add_option("--q", oc_q, "prime field size")->required();
    oc_cmd->add_option("--max-p", oc_p, "top simplicial degree");
    oc_cmd->add_option("--out", oc_out, "write the complex JSON here");
    auto* rh_cmd = stab_cmd->add_subcommand("row-homology", "dimension-truncated orbit row homology");
    int rh_n = 1, rh_k = 1, rh_l = 1;
    int64_t rh_q = 2;
    rh_cmd->add_option("--n", rh_n, "n")->required();
    rh_cmd->add_option("--q", rh_q, "prime field size")->required();
    rh_cmd->add_option("--k", rh_k, "filtration level")->required();
    rh_cmd->add_option("--max-l", rh_l, "top homology degree");
    auto* mw_cmd = stab_cmd->add_subcommand("minweight", "modular weight minimum");
    int64_t mw_p = 2;
    int mw_m = 1;
    mw_cmd->add_option("--p", mw_p, "prime")->required();
    mw_cmd->add_option("--m", mw_m, "exponent")->required();

    // ---- verify -----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
    std::string verify_suite = "all";
    verify_cmd->add_option("suite", verify_suite, "all | ch1 | ch2 | ch3 | ch5");

    // ---- export ------------------------------------------------------------
    auto* export_cmd = app.add_subcommand("export", "re-emit a result file in another format");
    std::string export_in, export_format = "json", export_out;
    export_cmd->add_option("--in", export_in, "result JSON")->required();
    export_cmd->add_option("--format", export_format, "json | table | grid");
    export_cmd->add_option("--out", export_out, "output file");

    CLI11_PARSE(app, argc, argv);
    const std::string cache_dir = cache_dir_from(cache_flag);

    try {
        if (gl_cmd->parsed()) {
            ghom::LinearGroup gl = ghom::general_linear_group(gl_n, gl_q);
            Output{gl_out}.write_json(ghom::group_to_json(*gl.group));
        } else if (mk_cmd->parsed()) {
            Output{mk_out}.write_json(ghom::group_to_json(*ghom::parse_group_spec(mk_spec)));
        } else if (hom_cmd->parsed()) {
            ghom::GroupPtr g = ghom::parse_group_spec(hom_group);
            ghom::GModule m = ghom::parse_coeff_spec(hom_coeff, g);
            Json key;
            key["op"] = hom_co ? "cohomology" : "homology";
            key["version"] = kVersion;
            key["group"] = ghom::group_to_json(*g);
            key["coeff"] = ghom::module_to_json(m);
            key["max_degree"] = hom_deg;
            key["caps"] = caps;
            Json result = cached(cache_dir, ghom::canonical_dump(key), [&]() {
                ghom::HomologyResult r = hom_co ? ghom::group_cohomology(g, m, hom_deg, caps)
                                                : ghom::group_homology(g, m, hom_deg, caps);
                return ghom::homology_result_to_json(r);
            });
            if (hom_format == "table") {
                ghom::HomologyResult r = hom_co ? ghom::group_cohomology(g, m, hom_deg, caps)
                                                : ghom::group_homology(g, m, hom_deg, caps);
                Output{hom_out}.write(homology_table(r));
            } else if (hom_format == "json") {
                Output{hom_out}.write_json(result);
            } else {
                ghom::fail(ghom::Errc::UnknownFormat, hom_format);
            }
        } else if (smith_cmd->parsed()) {
            std::ifstream in(smith_in);
            ghom::require(bool(in), ghom::Errc::BadInput, "cannot open " + smith_in);
            Json j;
            in >> j;
            ghom::SparseMat a = ghom::matrix_from_json(j);
            ghom::SmithForm sf = ghom::smith_normal_form(a.dense());
            Json out;
            out["rank"] = sf.rank;
            Json diag = Json::array();
            for (const auto& d : sf.diagonal()) diag.push_back(d.str());
            out["diagonal"] = std::move(diag);
            out["D"] = ghom::matrix_to_json(ghom::SparseMat::from_dense(sf.D));
            out["U"] = ghom::matrix_to_json(ghom::SparseMat::from_dense(sf.U));
            out["V"] = ghom::matrix_to_json(ghom::SparseMat::from_dense(sf.V));
            Output{smith_out}.write_json(out);
        } else if (cartan_cmd->parsed()) {
            int64_t p = cartan_p == "Q" ? 0 : std::stoll(cartan_p);
            ghom::PowerSeries expected = ghom::cartan_expected_dims(p, cartan_d, cartan_deg);
            std::ostringstream os;
            os << "degree:   ";
            for (int n = 0; n <= cartan_deg; ++n) os << n << ' ';
            os << "\nexpected: ";
            for (int n = 0; n <= cartan_deg; ++n) os << expected.at(n).str() << ' ';
            if (p != 0) {
                ghom::CartanVerifyReport rep = ghom::cartan_verify(p, cartan_d, cartan_deg, caps);
                os << "\ncomputed: ";
                for (int v : rep.computed) os << v << ' ';
                os << "\nresult:   " << (rep.pass ? "PASS" : "FAIL");
                std::cout << os.str() << std::endl;
                return rep.pass ? 0 : 1;
            }
            os << "\n(the rational series has no finite-group computation attached)";
            std::cout << os.str() << std::endl;
        } else if (pages_cmd->parsed()) {
            std::ifstream in(pages_in);
            ghom::require(bool(in), ghom::Errc::BadInput, "cannot open " + pages_in);
            Json j;
            in >> j;
            ghom::FilteredComplex fc = ghom::filtered_from_json(j);
            if (!pages_ring.empty()) {
                ghom::Ring r = ghom::parse_ring(pages_ring);
                if (r.kind == ghom::RingKind::Fp && fc.cx.ring.kind == ghom::RingKind::Z) {
                    fc.cx.ring = r;  // reduce the integral complex mod p
                } else {
                    ghom::require(r == fc.cx.ring, ghom::Errc::RingMismatch,
                                  "ring override must match or reduce Z mod p");
                }
            }
            auto pgs = ghom::pages(fc, pages_max);
            if (pages_format == "grid")
                Output{pages_out}.write(ghom::pages_to_grid(pgs));
            else if (pages_format == "json")
                Output{pages_out}.write_json(ghom::pages_to_json(pgs));
            else
                ghom::fail(ghom::Errc::UnknownFormat, pages_format);
        } else if (lhs_cmd->parsed()) {
            ghom::GroupPtr g = ghom::parse_group_spec(lhs_group);
            std::vector<int> h = parse_subgroup(g, lhs_normal);
            ghom::GModule m = ghom::parse_coeff_spec(lhs_coeff, g);
            ghom::LhsReport rep = ghom::lhs_e2(g, h, m, lhs_p, lhs_q, caps);
            Json out;
            out["group"] = g->name;
            out["quotient_order"] = rep.quotient.group->order;
            out["e2"] = rep.e2;
            out["h_dims"] = rep.h_dims;
            out["e2_antidiagonal"] = rep.e2_antidiagonal;
            out["collapse_consistent"] = rep.collapse_consistent;
            out["forced_differentials"] = rep.forced_differentials;
            out["iota_ranks"] = rep.iota_ranks;
            if (lhs_format == "json") {
                Output{lhs_out}.write_json(out);
            } else if (lhs_format == "grid") {
                std::ostringstream os;
                os << "E2 for " << g->name << " (p columns, q rows)\n";
                for (int q = lhs_q; q >= 0; --q) {
                    os << "  q=" << q << " |";
                    for (int p = 0; p <= lhs_p; ++p) os << ' ' << rep.e2[p][q];
                    os << "\n";
                }
                os << "audit (n: sum vs dim H_n): ";
                for (size_t n = 0; n < rep.h_dims.size(); ++n) {
                    os << n << ": " << rep.e2_antidiagonal[n] << (rep.forced_differentials[n] ? ">" : "=")
                       << rep.h_dims[n] << "  ";
                }
                os << "\n";
                Output{lhs_out}.write(os.str());
            } else {
                ghom::fail(ghom::Errc::UnknownFormat, lhs_format);
            }
        } else if (oc_cmd->parsed()) {
            ghom::VectorOrbitComplex voc = ghom::vector_orbit_complex(oc_n, oc_q, oc_p, caps);
            ghom::OrbitRowComplex row = ghom::orbit_row_complex(voc);
            std::ostringstream os;
            os << voc.gl.group->name << " on nonzero vectors of F_" << oc_q << "^" << (oc_n + 1)
               << "\n";
            for (int p = 0; p <= oc_p; ++p)
                os << "  degree " << p << ": rank " << voc.complex.cx.ranks[p] << ", orbits "
                   << row.cx.ranks[p] << "\n";
            std::cout << os.str();
            if (!oc_out.empty())
                Output{oc_out}.write_json(ghom::complex_to_json(voc.complex.cx));
        } else if (rh_cmd->parsed()) {
            ghom::RowFiltrationReport rep =
                ghom::row_filtration_homology(rh_n, rh_q, rh_k, rh_l, caps);
            std::ostringstream os;
            os << "orbit row complex, filtration k=" << rh_k << "\n";
            for (size_t l = 0; l < rep.homology.size(); ++l)
                os << "  H_" << l << " = " << rep.homology[l].str() << " (oracle "
                   << rep.oracle[l].str() << ")\n";
            os << "routes agree: " << (rep.routes_agree ? "yes" : "NO") << "\n";
            os << "k-acyclic up to degree " << rep.acyclicity_bound << ": "
               << (rep.k_acyclic ? "yes" : "no") << "\n";
            std::cout << os.str();
            if (!rep.routes_agree) return 1;
        } else if (mw_cmd->parsed()) {
            int64_t got = ghom::min_weight_modular(mw_p, mw_m);
            std::cout << "min weight = " << got << " ((p-1)m = " << (mw_p - 1) * mw_m << ")"
                      << std::endl;
        } else if (verify_cmd->parsed()) {
            auto results = ghom::run_suite(verify_suite);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " ("
                          << r.suite << "): " << r.name;
                std::printf("  [%.2fs]\n", r.seconds);
                if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        } else if (export_cmd->parsed()) {
            std::ifstream in(export_in);
            ghom::require(bool(in), ghom::Errc::BadInput, "cannot open " + export_in);
            Json j;
            in >> j;
            if (export_format == "json") {
                Output{export_out}.write_json(j);
            } else if (export_format == "table" || export_format == "grid") {
                if (j.is_array() && !j.empty() && j.at(0).contains("page")) {
                    std::vector<ghom::SSPage> pgs;
                    for (const auto& pj : j) {
                        ghom::SSPage pg;
                        pg.r = pj.at("page").get<int>();
                        if (pj.contains("dims"))
                            pg.dim = pj.at("dims").get<std::vector<std::vector<int>>>();
                        pgs.push_back(std::move(pg));
                    }
                    Output{export_out}.write(ghom::pages_to_grid(pgs));
                } else if (j.contains("degrees")) {
                    std::ostringstream os;
                    os << (j.value("kind", "homology")) << " of " << j.value("group", "?")
                       << "\n";
                    int k = 0;
                    for (const auto& dj : j.at("degrees"))
                        os << "  degree " << k++ << ": " << ghom::finab_from_json(dj).str()
                           << "\n";
                    Output{export_out}.write(os.str());
                } else if (j.is_array()) {
                    std::ostringstream os;
                    for (const auto& dj : j) os << ghom::finab_from_json(dj).str() << "\n";
                    Output{export_out}.write(os.str());
                } else {
                    ghom::fail(ghom::Errc::BadInput, "unrecognized result file");
                }
            } else {
                ghom::fail(ghom::Errc::UnknownFormat, export_format);
            }
        }
    } catch (const ghom::Error& e) {
        Json err;
        err["error"] = ghom::errc_name(e.code());
        err["message"] = e.what();
        std::cerr << err.dump() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "BadInput";
        err["message"] = e.what();
        std::cerr << err.dump() << std::endl;
        return 2;
    }
    return 0;
}
