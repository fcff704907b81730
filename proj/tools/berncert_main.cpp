#include "berncert/hankel.hpp"
#include "berncert/phi.hpp"
#include "berncert/series.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace berncert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnestablished = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::vector<int> parse_splits(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(piece, &used);
            if (used != piece.size() || v < 1) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad split count '" + piece + "' in --splits");
        }
    }
    if (out.empty()) throw InputError("--splits must name at least one axis");
    return out;
}

Box parse_box(const std::string& text) {
    Box box;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        const auto colon = piece.find(':');
        if (colon == std::string::npos) throw InputError("bad interval '" + piece + "' in --box");
        try {
            Rational lo = rat_parse(piece.substr(0, colon));
            Rational hi = rat_parse(piece.substr(colon + 1));
            if (lo > hi) throw InputError("empty interval '" + piece + "' in --box");
            box.iv.emplace_back(std::move(lo), std::move(hi));
        } catch (const std::invalid_argument&) {
            throw InputError("bad interval '" + piece + "' in --box");
        }
    }
    return box;
}

Rational tensor_max(const BernsteinTensor& t) {
    Rational m = t.beta.front();
    for (const auto& v : t.beta)
        if (v > m) m = v;
    return m;
}

std::string md_matrix(const BernsteinTensor& t, int k) {
    std::ostringstream os;
    os << "| i\\j | 0 | 1 | 2 | 3 | 4 |\n|---|---|---|---|---|---|\n";
    for (int i = 0; i <= 6; ++i) {
        os << "| " << i << " |";
        for (int j = 0; j <= 4; ++j) os << " " << rat_str(t.at({i, j, k})) << " |";
        os << "\n";
    }
    return os.str();
}

std::string tex_matrix(const BernsteinTensor& t, int k, const std::string& name) {
    std::ostringstream os;
    os << "\\[\n" << name << " = \\begin{pmatrix}\n";
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 4; ++j) os << rat_str(t.at({i, j, k})) << (j < 4 ? " & " : "");
        os << " \\\\\n";
    }
    os << "\\end{pmatrix}\n\\]\n";
    return os.str();
}

int cmd_certify(const std::string& poly_file, const std::string& bound_text,
                const std::string& splits_text, int depth, const std::vector<std::string>& chains,
                bool strict, const std::string& box_text, const std::string& out_dir) {
    MultiPoly poly = poly_const({"z"}, Rational(0));
    Rational bound;
    SubdivisionPolicy policy;
    Box box;
    try {
        poly = poly_from_json(nlohmann::json::parse(slurp(poly_file)));
        bound = rat_parse(bound_text);
        if (!splits_text.empty()) {
            auto splits = parse_splits(splits_text);
            if (splits.size() != poly.var_count())
                throw InputError("--splits names " + std::to_string(splits.size()) +
                                 " axes for a polynomial in " + std::to_string(poly.var_count()));
            policy.schedule.push_back(std::move(splits));
        }
        if (depth < 0) throw InputError("--depth must be nonnegative");
        policy.max_depth = depth;
        for (const auto& name : chains) {
            if (!hand_chain_registered(name)) throw InputError("unknown chain '" + name + "'");
            policy.hand_chains.push_back(name);
        }
        box = box_text.empty() ? Box::unit_cube(poly.var_count()) : parse_box(box_text);
        if (box.dim() != poly.var_count())
            throw InputError("--box has " + std::to_string(box.dim()) + " intervals for a polynomial in " +
                             std::to_string(poly.var_count()) + " variables");
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }

    const Certificate cert = certify_upper_bound(poly, box, bound, policy, strict);
    fs::create_directories(out_dir);
    const fs::path out = fs::path(out_dir) / (fs::path(poly_file).stem().string() + ".cert.json");
    spill(out, certificate_to_json(cert).dump(2) + "\n");

    std::cout << "certify: " << verdict_str(cert.overall) << " (" << cert.nodes.size()
              << " nodes) -> " << out.string() << "\n";
    if (cert.overall == Verdict::Failed) {
        for (const auto& node : cert.nodes)
            if (node.verdict == Verdict::Failed) {
                std::cout << "counterexample: value " << rat_str(node.witness_value) << " at (";
                for (size_t k = 0; k < node.witness_point.size(); ++k)
                    std::cout << (k ? ", " : "") << rat_str(node.witness_point[k]);
                std::cout << ")\n";
                break;
            }
    } else if (cert.overall == Verdict::Undecided) {
        if (const auto worst = worst_residual(cert))
            std::cout << "worst undecided leaf: node " << worst->first << " with max "
                      << rat_str(worst->second) << "\n";
    }
    return cert.overall == Verdict::Proved ? kExitOk : kExitUnestablished;
}

int cmd_replay(const std::string& cert_file) {
    Certificate cert;
    try {
        cert = certificate_from_json(nlohmann::json::parse(slurp(cert_file)));
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    const ReplayResult r = certificate_replay(cert);
    if (r.accepted) {
        std::cout << "replay: accepted (" << cert.nodes.size() << " nodes, bound "
                  << rat_str(cert.bound) << ", " << verdict_str(cert.overall) << ")\n";
        return cert.overall == Verdict::Proved ? kExitOk : kExitUnestablished;
    }
    std::cout << "replay: rejected: " << r.reason << "\n";
    return kExitUnestablished;
}

int cmd_verify(const std::string& format, const std::string& out_dir) {
    const std::vector<std::string> diff = reference_table_diff();
    const BoundReport h2 = verify_h2_theorem();
    const BoundReport h3 = verify_h3_theorem();

    struct Gate {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Gate> gates;
    for (const auto& [m, n] : {std::pair<int, int>{1, 2}, {1, 3}, {2, 5}}) {
        const PhiSpec spec(m, n);
        const bool ok = univalence_check(spec).univalent && starlike_wrt_one_check(spec).starlike &&
                        re_positivity_check(spec).positive;
        gates.push_back({"gates-" + std::to_string(m) + "-" + std::to_string(n), ok,
                         "univalent, starlike, positive real part"});
    }
    {
        const PhiSpec spec(1, 1);
        const UnivalenceVerdict uv = univalence_check(spec);
        bool ok = !uv.univalent && uv.witness.has_value();
        std::string detail = "no witness";
        if (uv.witness) {
            const auto& w = *uv.witness;
            ok = ok && w.z1 != w.z2 && phi_eval(spec, w.z1) == w.value &&
                 phi_eval(spec, w.z2) == w.value;
            detail = "phi(" + rat_str(w.z1) + ") = phi(" + rat_str(w.z2) + ") = " +
                     rat_str(w.value);
        }
        gates.push_back({"collision-1-1", ok, detail});
    }
    {
        const RePositivityVerdict lo = re_positivity_check(PhiSpec(85, 100));
        const RePositivityVerdict hi = re_positivity_check(PhiSpec(86, 100));
        const bool ok = lo.positive && !hi.positive && lo.threshold_poly < 0 &&
                        hi.threshold_poly > 0 && lo.vertex_case && hi.vertex_case;
        gates.push_back({"threshold-flip", ok,
                         "positivity flips between a = 85/100 and a = 86/100; carrier signs " +
                             rat_str(lo.threshold_poly) + " / " + rat_str(hi.threshold_poly)});
    }

    bool ok = diff.empty() && h2.proved && h3.proved;
    for (const auto& g : gates) ok = ok && g.ok;

    if (format == "json") {
        nlohmann::ordered_json j;
        j["tables_match"] = diff.empty();
        j["table_diff"] = diff;
        j["h2"] = bound_report_to_json(h2);
        j["h3"] = bound_report_to_json(h3);
        auto gj = nlohmann::ordered_json::array();
        for (const auto& g : gates) gj.push_back({{"name", g.name}, {"ok", g.ok}, {"detail", g.detail}});
        j["phi_gates"] = std::move(gj);
        j["ok"] = ok;
        const std::string text = j.dump(2) + "\n";
        if (out_dir.empty()) {
            std::cout << text;
        } else {
            fs::create_directories(out_dir);
            spill(fs::path(out_dir) / "verify.json", text);
        }
    } else {
        std::ostringstream os;
        os << "# Full verification\n\n";
        os << "Frozen tables: " << (diff.empty() ? "all entries match" : "MISMATCH") << "\n\n";
        for (const auto& d : diff) os << "- " << d << "\n";
        os << "\n" << bound_report_markdown(h2) << "\n" << bound_report_markdown(h3) << "\n";
        os << "## Curve gates\n\n| gate | ok | detail |\n|---|---|---|\n";
        for (const auto& g : gates)
            os << "| " << g.name << " | " << (g.ok ? "yes" : "NO") << " | " << g.detail << " |\n";
        os << "\nOverall: **" << (ok ? "pass" : "FAIL") << "**\n";
        const std::string text = os.str();
        if (out_dir.empty()) {
            std::cout << text;
        } else {
            fs::create_directories(out_dir);
            spill(fs::path(out_dir) / "verify.md", text);
        }
    }
    if (!diff.empty()) std::cerr << "first divergent entry: " << diff.front() << "\n";
    return ok ? kExitOk : kExitUnestablished;
}

int cmd_phi(long long m, long long n) {
    std::unique_ptr<PhiSpec> spec;
    try {
        spec = std::make_unique<PhiSpec>(m, n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    std::cout << "phi(z) = 1 + z + (" << m << "/" << n << ") z^2, a = " << rat_str(spec->a())
              << "\n";
    std::cout << "admissible (2m <= n): " << (spec->admissible() ? "yes" : "no") << "\n";

    const UnivalenceVerdict uv = univalence_check(*spec);
    std::cout << "univalent on the disk: " << (uv.univalent ? "yes" : "no");
    if (uv.witness)
        std::cout << "  [phi(" << rat_str(uv.witness->z1) << ") = phi(" << rat_str(uv.witness->z2)
                  << ") = " << rat_str(uv.witness->value) << "]";
    std::cout << "\n";

    const StarlikeVerdict sv = starlike_wrt_one_check(*spec);
    std::cout << "image starlike wrt phi(0) = 1: " << (sv.starlike ? "yes" : "no");
    if (sv.witness)
        std::cout << "  [at r = " << rat_str(sv.witness->first)
                  << ", z phi'/(phi - 1) = " << rat_str(sv.witness->second) << "]";
    std::cout << "\n";

    const RePositivityVerdict rp = re_positivity_check(*spec);
    std::cout << "Re phi > 0 on the closed disk: " << (rp.positive ? "yes" : "no") << "  [min "
              << rat_str(rp.minimum) << " at x = " << rat_str(rp.argmin_x)
              << (rp.vertex_case ? ", interior vertex" : ", endpoint") << ", carrier 8a^2-8a+1 = "
              << rat_str(rp.threshold_poly) << "]\n";
    return kExitOk;
}

int cmd_tables(const std::string& format, const std::string& out_dir) {
    const BoundPolys bp = build_bound_polys();
    const Box cube = Box::unit_cube(3);
    const std::vector<int> degrees{6, 4, 3};
    const BernsteinTensor first = to_bernstein(bp.Rtilde, degrees, cube);
    const BernsteinTensor second = to_bernstein(bp.R2tilde, degrees, cube);
    const auto cells = subdivide(bp.Rtilde, cube, {8, 8, 1});
    const auto quads = subdivide(bp.R2tilde, cube, {2, 2, 1});

    std::ostringstream os;
    if (format == "tex") {
        os << "% Bernstein data for the cube objectives, degrees (6,4,3) on [0,1]^3.\n"
           << "% Rows i = 0..6 (p), columns j = 0..4 (x), one matrix per u-slice k.\n";
        os << "\\section*{First objective}\n";
        for (int k = 0; k < 4; ++k) os << tex_matrix(first, k, "M_{" + std::to_string(k) + "}");
        os << "\\section*{First objective, cell maxima under the 8x8x1 subdivision}\n"
           << "\\[\n\\begin{pmatrix}\n";
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b)
                os << rat_str(tensor_max(cells[static_cast<size_t>(a * 8 + b)].second))
                   << (b < 7 ? " & " : "");
            os << " \\\\\n";
        }
        os << "\\end{pmatrix}\n\\]\n";
        os << "\\section*{Second objective}\n";
        for (int k = 0; k < 4; ++k) os << tex_matrix(second, k, "M_{" + std::to_string(k) + "}");
        os << "\\section*{Second objective, quadrant matrices}\n";
        for (int q = 0; q < 4; ++q) {
            os << "% quadrant " << q << ", max " << rat_str(tensor_max(quads[static_cast<size_t>(q)].second))
               << "\n";
            for (int k = 0; k < 4; ++k)
                os << tex_matrix(quads[static_cast<size_t>(q)].second, k,
                                 "Q^{(" + std::to_string(q) + ")}_{" + std::to_string(k) + "}");
        }
    } else {
        os << "# Bernstein data for the cube objectives\n\n"
           << "Degrees (6, 4, 3) on [0,1]^3; rows i = 0..6 (p), columns j = 0..4 (x), one\n"
           << "matrix per u-power slice k. All entries are exact.\n\n";
        os << "## First objective\n\n";
        for (int k = 0; k < 4; ++k)
            os << "### M_" << k << "\n\n" << md_matrix(first, k) << "\n";
        os << "### Cell maxima, 8x8x1 subdivision\n\n| a\\b | 0 | 1 | 2 | 3 | 4 | 5 | 6 | 7 |\n"
           << "|---|---|---|---|---|---|---|---|---|\n";
        for (int a = 0; a < 8; ++a) {
            os << "| " << a << " |";
            for (int b = 0; b < 8; ++b)
                os << " " << rat_str(tensor_max(cells[static_cast<size_t>(a * 8 + b)].second)) << " |";
            os << "\n";
        }
        os << "\n## Second objective\n\n";
        for (int k = 0; k < 4; ++k)
            os << "### M_" << k << "\n\n" << md_matrix(second, k) << "\n";
        os << "### Quadrant matrices, 2x2x1 subdivision\n\n";
        for (int q = 0; q < 4; ++q) {
            os << "#### Quadrant " << q << " (max "
               << rat_str(tensor_max(quads[static_cast<size_t>(q)].second)) << ")\n\n";
            for (int k = 0; k < 4; ++k)
                os << "M_" << k << "\n\n" << md_matrix(quads[static_cast<size_t>(q)].second, k) << "\n";
        }
    }

    if (out_dir.empty()) {
        std::cout << os.str();
        return kExitOk;
    }
    fs::create_directories(out_dir);
    spill(fs::path(out_dir) / (format == "tex" ? "tables.tex" : "tables.md"), os.str());
    spill(fs::path(out_dir) / "rtilde.json", poly_to_json(bp.Rtilde).dump(2) + "\n");
    spill(fs::path(out_dir) / "r2tilde.json", poly_to_json(bp.R2tilde).dump(2) + "\n");

    nlohmann::ordered_json ex;
    for (const auto& [key, kind] :
         {std::pair<const char*, ExtremalTarget>{"h2", ExtremalTarget::H2},
          {"h3", ExtremalTarget::H3}}) {
        const PhiSpec spec(1, 2);
        const PowerSeries f = extremal_function(kind, spec, 16);
        TaylorCoeffs tc;
        tc.a2 = GaussianRational(f.at(2));
        tc.a3 = GaussianRational(f.at(3));
        tc.a4 = GaussianRational(f.at(4));
        tc.a5 = GaussianRational(f.at(5));
        const HankelValues hv = hankel_values(tc);
        auto coeffs = nlohmann::ordered_json::array();
        for (int k = 0; k <= f.order(); ++k) coeffs.push_back(rat_str(f.at(k)));
        ex[key]["m"] = 1;
        ex[key]["n"] = 2;
        ex[key]["coefficients"] = std::move(coeffs);
        ex[key]["determinant"] =
            kind == ExtremalTarget::H2 ? grat_str(hv.h2) : grat_str(hv.h3);
    }
    spill(fs::path(out_dir) / "extremal.json", ex.dump(2) + "\n");
    std::cout << "tables: wrote " << (format == "tex" ? "tables.tex" : "tables.md")
              << ", rtilde.json, r2tilde.json, extremal.json to " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified polynomial inequality toolkit (exact Bernstein enclosures)"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 0;
    app.add_option("--workers", workers, "worker count for tensor kernels (default: env/auto)");

    std::string poly_file, bound_text, splits_text, box_text, out_dir = ".";
    int depth = 16;
    std::vector<std::string> chains;
    bool strict = false;
    std::string format = "json";
    auto* certify = app.add_subcommand("certify", "prove poly <= bound on a box");
    certify->add_option("--poly", poly_file, "polynomial file (interchange JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    certify->add_option("--bound", bound_text, "upper bound, as N or N/D")->required();
    certify->add_option("--splits", splits_text, "level-0 split counts, e.g. 8,8,1");
    certify->add_option("--depth", depth, "maximum subdivision depth");
    certify->add_option("--chain", chains, "named sub-proof the certifier may consult");
    certify->add_flag("--strict", strict, "prove the strict inequality");
    certify->add_option("--box", box_text, "domain box lo:hi,lo:hi,... (default unit cube)");
    certify->add_option("--out", out_dir, "output directory");

    std::string cert_file;
    auto* replay = app.add_subcommand("replay", "re-check a certificate from scratch");
    replay->add_option("cert", cert_file, "certificate JSON file")
        ->required()
        ->check(CLI::ExistingFile);

    std::string verify_format = "md", verify_out;
    auto* verify = app.add_subcommand("verify", "recompute every published table and theorem");
    verify->add_option("--format", verify_format, "md or json")
        ->check(CLI::IsMember({"md", "json"}));
    verify->add_option("--out", verify_out, "write the report here instead of stdout");

    long long phi_m = 0, phi_n = 0;
    auto* phi = app.add_subcommand("phi", "curve gates for phi(z) = 1 + z + (m/n) z^2");
    phi->add_option("--m", phi_m, "numerator of a")->required();
    phi->add_option("--n", phi_n, "denominator of a")->required();

    std::string tables_format = "md", tables_out;
    auto* tables = app.add_subcommand("tables", "emit Bernstein matrices and extremal data");
    tables->add_option("--format", tables_format, "md or tex")
        ->check(CLI::IsMember({"md", "tex"}));
    tables->add_option("--out", tables_out, "write files here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (workers > 0) set_worker_count(workers);
        ensure_builtin_chains_registered();
        if (certify->parsed())
            return cmd_certify(poly_file, bound_text, splits_text, depth, chains, strict,
                               box_text, out_dir);
        if (replay->parsed()) return cmd_replay(cert_file);
        if (verify->parsed()) return cmd_verify(verify_format, verify_out);
        if (phi->parsed()) return cmd_phi(phi_m, phi_n);
        if (tables->parsed()) return cmd_tables(tables_format, tables_out);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
