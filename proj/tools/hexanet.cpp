#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hexanet/hermitian_quat.hpp"
#include "hexanet/json_io.hpp"
#include "hexanet/laurent.hpp"
#include "hexanet/reconstruct.hpp"
#include "hexanet/svg.hpp"

using namespace hexanet;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 2 validation failure, 3 non-generic input, 64 usage
constexpr int kExitValidation = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitUsage = 64;

json read_stdin_json() {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON on stdin: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    int n = 0;
    std::string ring = "Q";
    std::uint64_t seed = 1;
    bool hermitian = false;
    std::string tiling = "standard";
    int hexagon = -1;
    int random_flips = 0;
    std::string entry;
    bool count_only = false;
    std::string format = "svg";
};

Tiling load_tiling(const std::string& spec, int n) {
    if (spec == "standard") return standard_tiling(n);
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open tiling file: " + spec);
    json j = json::parse(in, nullptr, true, true);
    Tiling t = tiling_from_json(j);
    if (t.n != n) throw ParseError("tiling rank does not match the matrix");
    auto violations = validate(t);
    if (!violations.empty()) throw ParseError("invalid tiling: " + violations.front().message);
    return t;
}

void cmd_gen(const Options& opt) {
    Rng rng(opt.seed);
    Ring ring = ring_from_name(opt.ring);
    ExactMatrix m = (ring == Ring::Quat || opt.hermitian)
                        ? random_hermitian_generic(opt.n, ring, rng)
                        : random_generic_matrix(opt.n, ring, rng);
    emit(matrix_to_json(m));
}

void cmd_to_network(const Options& opt) {
    ExactMatrix m = matrix_from_json(read_stdin_json());
    Tiling t = load_tiling(opt.tiling, m.n());
    Network net = matrix_ring(m) == Ring::Quat ? q_matrix_to_network(m, t)
                                               : matrix_to_network(m, t);
    emit(network_to_json(net));
}

void cmd_flip(const Options& opt) {
    Network net = network_from_json(read_stdin_json());
    if (opt.hexagon >= 0) {
        auto hexes = find_hexagons(net.tiling);
        if (opt.hexagon >= int(hexes.size()))
            throw ParseError("hexagon index out of range (have " +
                             std::to_string(hexes.size()) + ")");
        net = cube_move(net, hexes[opt.hexagon]);
    } else {
        Rng rng(opt.seed);
        for (int k = 0; k < opt.random_flips; ++k) {
            auto hexes = find_hexagons(net.tiling);
            net = cube_move(net, hexes[std::size_t(rng.uniform(0, long(hexes.size()) - 1))]);
        }
    }
    emit(network_to_json(net));
}

void cmd_reconstruct() {
    Network net = network_from_json(read_stdin_json());
    ExactMatrix m = net.ring() == Ring::Quat ? hermitian_reconstruct(net)
                                             : reconstruct_any(net);
    emit(matrix_to_json(m));
}

void cmd_laurent(const Options& opt) {
    int i = 0, j = 0;
    if (std::sscanf(opt.entry.c_str(), "%d,%d", &i, &j) != 2)
        throw ParseError("--entry expects i,j");
    if (i < 1 || j < 1 || i > opt.n || j > opt.n) throw ParseError("entry out of range");
    auto m = symbolic_reconstruct(opt.n);
    const LaurentPoly& e = m.at(i, j);
    if (opt.count_only) {
        std::cout << e.term_count() << "\n";
        return;
    }
    StandardVars vars = StandardVars::make(opt.n);
    std::cout << e.to_string(vars.names()) << "\n";
    std::cerr << "terms: " << e.term_count() << " (= half-aztec domino tilings)\n";
}

void cmd_tilings(const Options& opt) {
    auto all = enumerate_tilings(opt.n);
    if (opt.count_only) {
        std::cout << all.size() << "\n";
        return;
    }
    json out = json::array();
    for (const Tiling& t : all) out.push_back(tiling_to_json(t));
    emit(out);
}

void cmd_verify() {
    ExactMatrix m = matrix_from_json(read_stdin_json());
    json report = json::object();
    bool ok = true;

    auto witness = genericity_witness(m);
    report["generic"] = !witness.has_value();
    if (witness) report["vanishing_minor"] = witness->to_string();
    ok &= !witness.has_value();

    if (matrix_ring(m) != Ring::Quat) {
        bool dodgson_ok = true;
        for (int i = 1; i <= m.n() && dodgson_ok; ++i)
            for (int j = i + 1; j <= m.n() && dodgson_ok; ++j)
                for (Subset s = 0; s <= full_subset(m.n()); ++s) {
                    if (subset_contains(s, i) || subset_contains(s, j)) continue;
                    if (!dodgson_identity_check(m, s, i, j)) {
                        dodgson_ok = false;
                        break;
                    }
                }
        report["dodgson_identities"] = dodgson_ok;
        ok &= dodgson_ok;

        bool hexahedron_ok = true;
        for (const auto& [s, dirs] : rank3_intervals(m.n())) {
            SlotValues sv = slot_values(m, s, dirs, correspondence_table());
            for (const Scalar& r : hexahedron_residuals(sv.input, sv.starred))
                hexahedron_ok &= r.is_zero();
        }
        report["hexahedron_identities"] = hexahedron_ok;
        ok &= hexahedron_ok;

        if (is_hermitian_matrix(m)) {
            bool herm_ok = !witness && is_hermitian_network(
                                           matrix_to_network(m, standard_tiling(m.n())));
            report["hermitian_network"] = herm_ok;
            ok &= herm_ok;
        }
    } else {
        bool qh = is_q_hermitian(m);
        report["q_hermitian"] = qh;
        ok &= qh;
        if (qh) {
            bool dyson_ok = qdet(m) == qdet_pfaffian(m);
            report["dyson_identity"] = dyson_ok;
            ok &= dyson_ok;
            bool faces_ok = true;
            try {
                faces_ok = is_hermitian_network(q_matrix_to_network(m, standard_tiling(m.n())));
            } catch (const NonGenericError&) {
                faces_ok = false;
            }
            report["face_identities"] = faces_ok;
            ok &= faces_ok;
        }
    }
    report["ok"] = ok;
    emit(report);
    if (!ok) std::exit(kExitValidation);
}

void cmd_sample_posdef(const Options& opt) {
    Rng rng(opt.seed);
    Network net = sample_positive_network(opt.n, ring_from_name(opt.ring), rng);
    json out{{"matrix", matrix_to_json(reconstruct(net))}, {"network", network_to_json(net)}};
    emit(out);
}

void cmd_qdet() {
    ExactMatrix m = matrix_from_json(read_stdin_json());
    if (matrix_ring(m) != Ring::Quat) throw ParseError("qdet expects a quaternionic matrix (ring H)");
    Rat d = qdet(m);
    Rat p = qdet_pfaffian(m);
    json out{{"qdet", d.get_num().get_str() + "/" + d.get_den().get_str()},
             {"pfaffian", p.get_num().get_str() + "/" + p.get_den().get_str()},
             {"agree", d == p}};
    emit(out);
}

void cmd_render(const Options& opt) {
    if (opt.format != "svg") throw ParseError("unsupported render format: " + opt.format);
    json j = read_stdin_json();
    if (j.contains("tiles"))
        std::cout << render_tiling_svg(tiling_from_json(j));
    else if (j.contains("tiling"))
        std::cout << render_network_svg(network_from_json(j));
    else
        throw ParseError("render expects a tiling or network JSON document");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexanet: exact principal-minor networks on rhombus tilings"};
    app.require_subcommand(1);
    Options opt;

    auto* gen = app.add_subcommand("gen", "random generic matrix as JSON");
    gen->add_option("--n", opt.n, "matrix size")->required();
    gen->add_option("--ring", opt.ring, "Q, C or H")->default_val("Q");
    gen->add_option("--seed", opt.seed, "rng seed")->default_val("1");
    gen->add_flag("--hermitian", opt.hermitian, "sample a Hermitian matrix (implied for H)");
    gen->callback([&] { cmd_gen(opt); });

    auto* ton = app.add_subcommand("to-network", "matrix JSON (stdin) -> network JSON");
    ton->add_option("--tiling", opt.tiling, "standard or a tiling JSON file")
        ->default_val("standard");
    ton->callback([&] { cmd_to_network(opt); });

    auto* flip = app.add_subcommand("flip", "apply cube moves to a network (stdin)");
    flip->add_option("--hexagon", opt.hexagon, "flip the k-th hexagon (sorted order)");
    flip->add_option("--random", opt.random_flips, "apply k random flips");
    flip->add_option("--seed", opt.seed, "rng seed")->default_val("1");
    flip->callback([&] { cmd_flip(opt); });

    auto* rec = app.add_subcommand("reconstruct", "network JSON (stdin) -> matrix JSON");
    rec->callback([&] { cmd_reconstruct(); });

    auto* lau = app.add_subcommand("laurent", "symbolic matrix entry as a Laurent polynomial");
    lau->add_option("--n", opt.n, "rank (<= 5)")->required();
    lau->add_option("--entry", opt.entry, "entry i,j")->required();
    lau->add_flag("--count-only", opt.count_only, "print only the number of terms");
    lau->callback([&] { cmd_laurent(opt); });

    auto* til = app.add_subcommand("tilings", "enumerate rhombus tilings of the 2n-gon");
    til->add_option("--n", opt.n, "rank")->required();
    til->add_flag("--count-only", opt.count_only, "print only the count");
    til->callback([&] { cmd_tilings(opt); });

    auto* ver = app.add_subcommand("verify", "run the identity suite on a matrix (stdin)");
    ver->callback([&] { cmd_verify(); });

    auto* pos = app.add_subcommand("sample-posdef", "positive-definite matrix and its network");
    pos->add_option("--n", opt.n, "matrix size")->required();
    pos->add_option("--ring", opt.ring, "Q or C")->default_val("Q");
    pos->add_option("--seed", opt.seed, "rng seed")->default_val("1");
    pos->callback([&] { cmd_sample_posdef(opt); });

    auto* qd = app.add_subcommand("qdet", "both quaternionic determinant evaluations (stdin)");
    qd->callback([&] { cmd_qdet(); });

    auto* ren = app.add_subcommand("render", "tiling or network JSON (stdin) -> SVG");
    ren->add_option("--format", opt.format, "output format")->default_val("svg");
    ren->callback([&] { cmd_render(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n" << e.what() << "\n";
        return kExitUsage;
    } catch (const NonGenericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const ZeroCofactorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
