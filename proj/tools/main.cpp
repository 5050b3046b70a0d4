#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermicode/hermicode.hpp"

namespace {

using namespace hermicode;

struct RunConfig {
    uint32_t q = 0, r = 0;
    int64_t s = -1, s_from = -1, s_to = -1;
    std::string out = "-";
    std::string format = "csv";
    uint64_t budget = uint64_t(1) << 24;
    unsigned jobs = 0;
    uint64_t seed = 0;
};

// Decomposes q = (p^e)^m with r = p^e; rejects pairs that are not a
// prime-power chain.
FieldTower tower_for(uint32_t q, uint32_t r) {
    if (q < 2 || r < 2) throw CLI::ValidationError("--q and --r must be at least 2");
    uint32_t p = 2;
    while (p <= q && q % p != 0) ++p;
    uint32_t t = 0, qq = q;
    while (qq % p == 0) {
        qq /= p;
        ++t;
    }
    if (qq != 1) throw CLI::ValidationError("--q must be a prime power");
    uint32_t u = 0, rr = r;
    while (rr % p == 0) {
        rr /= p;
        ++u;
    }
    if (rr != 1 || u == 0 || t % u != 0)
        throw CLI::ValidationError("--r must satisfy q = r^m for an integer m >= 1");
    return FieldTower::make(p, u, t / u);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file " + path);
    return file;
}

std::vector<int64_t> sweep_values(const RunConfig& cfg, const FieldTower& tw) {
    std::vector<int64_t> out;
    if (cfg.s >= 0) {
        out.push_back(cfg.s);
        return out;
    }
    const int64_t n = int64_t(tw.q()) * tw.q() * tw.q();
    int64_t from = cfg.s_from, to = cfg.s_to;
    if (from < 0 && to < 0) {
        from = std::max<int64_t>(0, n / tw.r() - 8);
        to = n - 1;
    }
    if (from < 0) from = 0;
    if (to < from) throw CLI::ValidationError("--s-to must be at least --s-from");
    for (int64_t s = from; s <= to; ++s) out.push_back(s);
    return out;
}

int cmd_points(const RunConfig& cfg) {
    const FieldTower tw = tower_for(cfg.q, cfg.q);
    const HermitianCurve curve(tw);
    std::ofstream file;
    write_points_csv(open_out(cfg.out, file), curve);
    return 0;
}

int cmd_code_params(const RunConfig& cfg, bool true_distance) {
    const FieldTower tw = tower_for(cfg.q, cfg.q);
    const HermitianCurve curve(tw);
    const LinearCode code = build_hermitian_code(curve, uint64_t(cfg.s));
    nlohmann::json j = nlohmann::json::parse(code_params_json(code));
    if (true_distance) j["d_true"] = brute_force_min_distance(code, cfg.budget);
    std::ofstream file;
    open_out(cfg.out, file) << j.dump(2) << "\n";
    return 0;
}

int cmd_subfield_dim(const RunConfig& cfg) {
    const FieldTower tw = tower_for(cfg.q, cfg.r);
    const HermitianCurve curve(tw);
    const SweepReport report = dimension_sweep(tw, curve, sweep_values(cfg, tw), cfg.jobs);
    std::ofstream file;
    std::ostream& os = open_out(cfg.out, file);
    if (cfg.format == "json")
        os << dim_rows_json(report);
    else
        write_dim_csv(os, report);
    return report.all_pass ? 0 : 1;
}

int cmd_matrix(const RunConfig& cfg, uint32_t subfield) {
    const FieldTower tw = tower_for(cfg.q, subfield ? subfield : cfg.q);
    const HermitianCurve curve(tw);
    const LinearCode parent = build_hermitian_code(curve, uint64_t(cfg.s));
    std::optional<SubfieldSubcodeResult> sub;
    if (subfield) sub = subfield_subcode(parent, tw);
    const MatrixGF& gens = sub ? sub->code.generators : parent.generators;
    std::ofstream txt(cfg.out + ".txt");
    if (!txt) throw CLI::ValidationError("cannot open " + cfg.out + ".txt");
    write_matrix_text(txt, gens);
    std::ofstream json(cfg.out + ".json");
    json << matrix_sidecar_json(gens);
    return 0;
}

int verify_table1(const RunConfig& cfg) {
    const FieldTower tw = FieldTower::make(2, 1, 3);
    const HermitianCurve curve(tw);
    const std::span<const ReferenceRow> table = c82_reference_table();
    std::vector<int64_t> svals;
    for (const ReferenceRow& row : table) svals.push_back(row.s);
    const SweepReport report = dimension_sweep(tw, curve, svals, cfg.jobs);
    size_t match = 0;
    for (size_t i = 0; i < table.size(); ++i) {
        const bool ok = report.rows[i].k0 == table[i].dim_subcode &&
                        report.rows[i].k == table[i].dim_parent && report.rows[i].pass;
        if (ok)
            ++match;
        else
            std::cout << "  mismatch at s=" << table[i].s << ": k0=" << report.rows[i].k0
                      << " (want " << table[i].dim_subcode << "), k=" << report.rows[i].k
                      << " (want " << table[i].dim_parent << ")\n";
    }
    std::cout << "table1: " << match << "/" << table.size() << " rows match: "
              << (match == table.size() ? "PASS" : "FAIL") << "\n";
    return match == table.size() ? 0 : 1;
}

int verify_theorem(const RunConfig& cfg) {
    const FieldTower tw = tower_for(cfg.q, cfg.r);
    const HermitianCurve curve(tw);
    const SweepReport report = main_theorem_sweep(tw, curve, cfg.jobs);
    for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
    std::cout << "theorem q=" << cfg.q << " r=" << cfg.r << ": " << report.rows.size()
              << " values of s checked: " << (report.all_pass ? "PASS" : "FAIL") << "\n";
    return report.all_pass ? 0 : 1;
}

int verify_delsarte(const RunConfig& cfg) {
    const FieldTower tw = tower_for(cfg.q, cfg.r);
    const HermitianCurve curve(tw);
    RunConfig range = cfg;
    if (range.s < 0 && range.s_from < 0 && range.s_to < 0) {
        range.s_from = 0;
        range.s_to = int64_t(tw.q()) * tw.q() * tw.q() + int64_t(tw.q()) * tw.q() - tw.q() - 2;
    }
    const std::vector<int64_t> svals = sweep_values(range, tw);
    const SweepReport report = dimension_sweep(tw, curve, svals, cfg.jobs);
    size_t ok = 0;
    for (const SweepRow& row : report.rows) {
        if (row.delsarte_ok)
            ++ok;
        else
            std::cout << "  delsarte fails at s=" << row.s << "\n";
    }
    std::cout << "delsarte q=" << cfg.q << " r=" << cfg.r << ": " << ok << "/"
              << report.rows.size() << " hold: " << (ok == report.rows.size() ? "PASS" : "FAIL")
              << "\n";
    return ok == report.rows.size() ? 0 : 1;
}

int verify_duality(const RunConfig& cfg) {
    const FieldTower tw = tower_for(cfg.q, cfg.q);
    const HermitianCurve curve(tw);
    const int64_t s_max = dual_hermitian_s(tw.q(), 0);
    std::mt19937_64 rng(cfg.seed);
    size_t ok = 0, total = 0;
    for (int64_t s = 1; s <= s_max; ++s) {
        const LinearCode code = build_hermitian_code(curve, uint64_t(s));
        const LinearCode dual = dual_code(code);
        const LinearCode expect =
            build_hermitian_code(curve, uint64_t(dual_hermitian_s(tw.q(), s)));
        ++total;
        bool good = row_space_equal(dual.generators, expect.generators);
        if (good && dual.dimension > 0) {
            // seeded spot check: a random dual codeword must satisfy the
            // s-tilde code's parity checks
            std::vector<FieldElement> v(code.n, tw.zero(tw.q2()));
            const std::vector<uint32_t> elems = tw.elements_of(tw.q2());
            std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
            for (size_t i = 0; i < dual.generators.rows(); ++i) {
                const uint32_t c = elems[pick(rng)];
                if (!c) continue;
                for (size_t j = 0; j < code.n; ++j)
                    v[j].value = tw.add_raw(v[j].value, tw.mul_raw(c, dual.generators.raw(i, j)));
            }
            good = is_codeword(expect, v);
        }
        if (good)
            ++ok;
        else
            std::cout << "  duality fails at s=" << s << "\n";
    }
    bool self_dual_ok = true;
    if (tw.q() % 2 == 0) {
        const int64_t mid = dual_hermitian_s(tw.q(), 0) / 2;
        const LinearCode code = build_hermitian_code(curve, uint64_t(mid));
        self_dual_ok = row_space_equal(dual_code(code).generators, code.generators);
        std::cout << "self-dual at s=" << mid << ": " << (self_dual_ok ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "duality q=" << cfg.q << ": " << ok << "/" << total
              << " hold: " << (ok == total && self_dual_ok ? "PASS" : "FAIL") << "\n";
    return ok == total && self_dual_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-point Hermitian codes over GF(q^2), their subfield subcodes and trace codes"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "seed for randomized spot checks");
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps (0 = hardware)");

    CLI::App* points = app.add_subcommand("points", "export the canonical affine point list");
    points->add_option("--q", cfg.q, "curve parameter q")->required();
    points->add_option("--out", cfg.out, "output path ('-' = stdout)");

    bool true_distance = false;
    CLI::App* params = app.add_subcommand("code-params", "n, k and designed d of H(q^2, s)");
    params->add_option("--q", cfg.q)->required();
    params->add_option("--s", cfg.s)->required();
    params->add_flag("--true-distance", true_distance,
                     "append the exhaustive minimum distance (within --budget)");
    params->add_option("--budget", cfg.budget, "message-space bound for brute force");
    params->add_option("--out", cfg.out);

    CLI::App* subdim = app.add_subcommand("subfield-dim",
                                          "dimensions of the subfield subcodes C_{q,r}(s)");
    subdim->add_option("--q", cfg.q)->required();
    subdim->add_option("--r", cfg.r)->required();
    subdim->add_option("--s", cfg.s, "single s");
    subdim->add_option("--s-from", cfg.s_from);
    subdim->add_option("--s-to", cfg.s_to);
    subdim->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    subdim->add_option("--out", cfg.out);

    uint32_t matrix_subfield = 0;
    CLI::App* matrix = app.add_subcommand("matrix", "export a generator matrix with JSON sidecar");
    matrix->add_option("--q", cfg.q)->required();
    matrix->add_option("--s", cfg.s)->required();
    matrix->add_option("--subfield", matrix_subfield, "export the GF(r) subcode instead");
    matrix->add_option("--out", cfg.out, "output base path (.txt and .json)")->required();

    std::string which;
    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--which", which, "delsarte | theorem | duality | table1")
        ->required()
        ->check(CLI::IsMember({"delsarte", "theorem", "duality", "table1"}));
    verify->add_option("--q", cfg.q);
    verify->add_option("--r", cfg.r);
    verify->add_option("--s-from", cfg.s_from);
    verify->add_option("--s-to", cfg.s_to);

    CLI11_PARSE(app, argc, argv);

    try {
        if (points->parsed()) return cmd_points(cfg);
        if (params->parsed()) return cmd_code_params(cfg, true_distance);
        if (subdim->parsed()) return cmd_subfield_dim(cfg);
        if (matrix->parsed()) return cmd_matrix(cfg, matrix_subfield);
        if (verify->parsed()) {
            if (which == "table1") return verify_table1(cfg);
            if (which == "theorem") return verify_theorem(cfg);
            if (which == "delsarte") return verify_delsarte(cfg);
            return verify_duality(cfg);
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
