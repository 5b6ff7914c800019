#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "amalgam/report.hpp"

namespace fs = std::filesystem;
using namespace amalgam;

namespace {

std::size_t vertex_cap() {
    if (const char* env = std::getenv("AMALGAM_MAX_VERTICES")) {
        long long v = std::atoll(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxVertices;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A spec argument is either inline JSON or a path to a JSON file.
ParsedSpec load_spec(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') text = slurp(arg);
    return parse_spec_text(text);
}

ParsedSpec load_spec_or_die(const std::string& arg) {
    ParsedSpec p = load_spec(arg);
    if (!p.ok()) {
        for (const auto& e : p.errors) std::cerr << e << "\n";
        std::exit(2);
    }
    return p;
}

void emit(const Json& j, bool human) {
    if (human)
        std::cout << render_human(j);
    else
        std::cout << j.dump(2) << "\n";
}

int cmd_classify(const std::string& spec_arg, bool human) {
    ParsedSpec p = load_spec_or_die(spec_arg);
    emit(full_report(p), human);
    return 0;
}

int cmd_qi(const std::string& a_arg, const std::string& b_arg, bool human) {
    ParsedSpec a = load_spec_or_die(a_arg);
    ParsedSpec b = load_spec_or_die(b_arg);
    Json j;
    bool eq = false;
    if (a.amalgam && b.amalgam) {
        eq = qi_equivalent_C(*a.amalgam, *b.amalgam);
        j["mode"] = "C-C";
    } else if (a.theta && b.theta) {
        eq = qi_equivalent_W(*a.theta, *b.theta);
        j["mode"] = "W-W";
    } else {
        const SurfaceAmalgamSpec& c = a.amalgam ? *a.amalgam : *b.amalgam;
        const ThetaGraphSpec& w = a.theta ? *a.theta : *b.theta;
        eq = qi_cross(c, w);
        j["mode"] = "C-W";
    }
    j["equivalent"] = eq;
    j["provenance"] = provenance_block();
    emit(j, human);
    return 0;
}

int cmd_commensurate(const std::string& c_arg, const std::string& w_arg, bool human) {
    ParsedSpec c = load_spec_or_die(c_arg);
    ParsedSpec w = load_spec_or_die(w_arg);
    if (!c.amalgam || !w.theta) {
        std::cerr << "commensurate needs one family-C spec and one family-W spec\n";
        return 2;
    }
    Json j = to_json(commensurable_CW(*c.amalgam, *w.theta));
    j["provenance"] = provenance_block();
    emit(j, human);
    return 0;
}

int cmd_tower(const std::string& spec_arg, bool verify, bool human) {
    ParsedSpec p = load_spec_or_die(spec_arg);
    if (!p.amalgam) {
        std::cerr << "tower needs a family-C spec\n";
        return 2;
    }
    Json j = tower_block(*p.amalgam, verify);
    j["provenance"] = provenance_block();
    emit(j, human);
    if (verify) {
        for (const char* key : {"links", "z_links"})
            for (const auto& l : j[key])
                if (l.contains("verify") && l["verify"] != "PASS") return 1;
        if (!j.value("x5_iso_z2", false)) return 1;
    }
    return 0;
}

int cmd_verify_cover(const std::string& path, bool human) {
    Json in = Json::parse(slurp(path), nullptr, false);
    if (in.is_discarded()) {
        std::cerr << "malformed JSON in " << path << "\n";
        return 2;
    }
    CoverMap cm;
    try {
        cm = covermap_from_json(in);
    } catch (const std::exception& e) {
        std::cerr << "bad cover file: " << e.what() << "\n";
        return 2;
    }
    CoverReport r = verify_cover(cm);
    Json j = to_json(r);
    j["provenance"] = provenance_block();
    emit(j, human);
    return r.pass ? 0 : 1;
}

int cmd_geometry(int m, int n, int radius, int collapse_s, int sample_size, bool human) {
    Json j;
    try {
        TreeBall ball = biregular_ball(m, n, radius, vertex_cap());
        j["ball"] = Json{{"m", m}, {"n", n}, {"radius", radius},
                         {"size", ball.size()}, {"level_sizes", ball.level_sizes()}};
        if (collapse_s >= 1) {
            Rational bound{collapse_s};
            auto block = [&](std::vector<std::pair<int, int>> pairs) {
                if (sample_size > 0 && static_cast<int>(pairs.size()) > sample_size)
                    pairs.resize(sample_size);
                DistortionResult d = measure_distortion(pairs);
                return Json{{"s", collapse_s},
                            {"pairs", static_cast<long long>(pairs.size())},
                            {"measured_L", d.L.str()},
                            {"measured_C", d.C.str()},
                            {"bound_L", bound.str()},
                            {"bound_C", bound.str()},
                            {"pass", d.L <= bound && d.C <= bound}};
            };
            LineCollapse line = collapse_map_line(collapse_s, radius);
            j["line_collapse"] = block(line.interior_pairs());
            TreeCollapse tree = collapse_map_tree(collapse_s, radius, vertex_cap());
            j["tree_collapse"] = block(tree.interior_pairs(collapse_s));
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    j["provenance"] = provenance_block();
    emit(j, human);
    return 0;
}

int cmd_batch(const std::string& dir, bool csv, bool human) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    if (ec) {
        std::cerr << "cannot read directory " << dir << "\n";
        return 2;
    }
    std::sort(files.begin(), files.end());
    Json rows = Json::array();
    for (const auto& f : files) {
        ParsedSpec p = load_spec(f.string());
        Json row;
        row["file"] = f.filename().string();
        if (!p.ok()) {
            row["error"] = p.errors.empty() ? "unparseable" : p.errors.front();
        } else if (p.amalgam) {
            row["family"] = "C";
            row["qi_class"] = to_string(qi_class_C(*p.amalgam));
            row["hyperbolic"] = is_hyperbolic_C(*p.amalgam);
            auto v = is_3manifold_group(*p.amalgam);
            row["is_3manifold"] = v.is_3manifold;
            if (v.witness) row["case"] = to_string(*v.witness);
            if (v.obstruction) row["case"] = to_string(*v.obstruction);
        } else {
            row["family"] = "W";
            row["qi_class"] = to_string(qi_class_W(*p.theta));
            row["hyperbolic"] = p.theta->linear_degree() <= 1;
            Json ev = Json::array();
            for (const auto& s : euler_vector(*p.theta).to_strings()) ev.push_back(s);
            row["euler_vector"] = ev;
        }
        rows.push_back(row);
    }
    if (csv) {
        std::cout << "file,family,qi_class,hyperbolic,is_3manifold,case,error\n";
        for (const auto& r : rows) {
            auto cell = [&](const char* k) {
                if (!r.contains(k)) return std::string{};
                const Json& v = r[k];
                return v.is_string() ? v.get<std::string>() : v.dump();
            };
            std::cout << cell("file") << ',' << cell("family") << ',' << cell("qi_class")
                      << ',' << cell("hyperbolic") << ',' << cell("is_3manifold") << ','
                      << cell("case") << ',' << cell("error") << "\n";
        }
        return 0;
    }
    Json j;
    j["rows"] = rows;
    j["count"] = static_cast<long long>(rows.size());
    j["provenance"] = provenance_block();
    emit(j, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface amalgam / theta-graph classification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --human after the subcommand
    bool human = false;
    app.add_flag("--human", human, "render tables instead of JSON");

    std::string spec_arg, spec_b, dir;
    bool verify = false, csv = false;
    int gm = 2, gn = 3, radius = 6, collapse_s = 0, sample_size = 0;

    auto* classify = app.add_subcommand("classify", "full classification report");
    classify->add_option("spec", spec_arg, "inline JSON or path")->required();

    auto* qi = app.add_subcommand("qi", "quasi-isometry equivalence of two specs");
    qi->add_option("specA", spec_arg)->required();
    qi->add_option("specB", spec_b)->required();

    auto* comm = app.add_subcommand("commensurate", "commensurability verdict (C vs W)");
    comm->add_option("specC", spec_arg)->required();
    comm->add_option("specW", spec_b)->required();

    auto* tower = app.add_subcommand("tower", "build the cover tower");
    tower->add_option("spec", spec_arg)->required();
    tower->add_flag("--verify", verify, "verify every link");

    auto* vc = app.add_subcommand("verify-cover", "verify a cover map file");
    vc->add_option("file", spec_arg)->required();

    auto* geo = app.add_subcommand("geometry", "tree balls and collapse distortion");
    geo->add_option("--m", gm);
    geo->add_option("--n", gn);
    geo->add_option("--radius", radius);
    geo->add_option("--collapse-s", collapse_s);
    geo->add_option("--sample-size", sample_size);

    auto* batch = app.add_subcommand("batch", "classify every *.json in a directory");
    batch->add_option("dir", dir)->required();
    batch->add_flag("--csv", csv, "emit CSV instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify(spec_arg, human);
        if (*qi) return cmd_qi(spec_arg, spec_b, human);
        if (*comm) return cmd_commensurate(spec_arg, spec_b, human);
        if (*tower) return cmd_tower(spec_arg, verify, human);
        if (*vc) return cmd_verify_cover(spec_arg, human);
        if (*geo) return cmd_geometry(gm, gn, radius, collapse_s, sample_size, human);
        if (*batch) return cmd_batch(dir, csv, human);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
