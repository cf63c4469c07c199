#include "thermocone/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "thermocone/catalysis.hpp"
#include "thermocone/cones.hpp"
#include "thermocone/cooling.hpp"
#include "thermocone/embedding.hpp"
#include "thermocone/entanglement.hpp"
#include "thermocone/format.hpp"
#include "thermocone/io.hpp"
#include "thermocone/volume.hpp"

namespace thermocone::cli {

namespace {

using nlohmann::json;
using io::UsageError;

struct Options {
    std::string input;
    std::string out;
    std::string out_dir;
    std::string format = "json";
    std::string region = "C+";
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t interior = kDefaultInteriorSamples;
    std::vector<double> betas;
    std::optional<double> beta;
    std::optional<double> gibbs_r;
    std::size_t grid = 200;
    std::size_t resolution = 20;
    std::size_t d = 3;
    std::size_t j = 1;
    std::int64_t max_den = 1000;
    bool exact = false;
    bool linearised = false;
};

struct Problem {
    EnergySpectrum spec;
    Dist state;
    std::optional<Dist> target;
    std::optional<double> catalyst_gibbs;
};

Problem load_checked(const Options& o, bool need_state, bool need_target) {
    if (o.input.empty()) throw UsageError("--input is required");
    const io::StateFile f = io::read_state_file(o.input);
    const double beta = o.beta.value_or(f.beta);
    Problem p{EnergySpectrum(f.energies, beta), Dist(), std::nullopt, f.catalyst_gibbs};
    if (need_state) {
        if (f.state.empty()) throw UsageError(o.input + ": missing field 'state'");
        if (f.state.size() != f.energies.size())
            throw UsageError(o.input + ": 'state' and 'energies' differ in length");
        p.state = Dist(f.state);
    }
    if (need_target) {
        if (!f.target) throw UsageError(o.input + ": missing field 'target'");
        if (f.target->size() != f.energies.size())
            throw UsageError(o.input + ": 'target' and 'energies' differ in length");
        p.target = Dist(*f.target);
    }
    return p;
}

// Malformed spectra or distributions in the input are usage errors.
Problem load(const Options& o, bool need_state, bool need_target) {
    try {
        return load_checked(o, need_state, need_target);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidArgument && e.code() != ErrorCode::DimensionMismatch)
            throw;
        throw UsageError(o.input + ": " + e.what());
    }
}

json vertices_json(const ConeVertices& cv) {
    json a = json::array();
    for (const ConeVertex& v : cv)
        a.push_back({{"order", io::one_based(v.order)}, {"vertex", io::numbers(v.vertex.values())}});
    return a;
}

std::string vertices_csv(const ConeVertices& cv) {
    std::ostringstream s;
    s << "order";
    for (std::size_t i = 0; i < (cv.empty() ? 0 : cv.front().vertex.size()); ++i) s << ",q" << i + 1;
    s << '\n';
    for (const ConeVertex& v : cv) {
        for (std::size_t k = 0; k < v.order.size(); ++k) s << (k ? "-" : "") << v.order[k] + 1;
        for (double x : v.vertex.values()) s << ',' << format_number(x, kCsvDigits);
        s << '\n';
    }
    return s.str();
}

json window_json(const QubitWindow& w) {
    return {{"lo", io::number(w.lo)}, {"hi", io::number(w.hi)}, {"empty", w.empty()}};
}

json windows_json(const QubitWindows& w, double g) {
    return {{"gibbs_r", io::number(g)},
            {"below", window_json(w.below)},
            {"above", window_json(w.above)}};
}

json estimate_json(const VolumeEstimate& v) {
    return {{"value", io::number(v.value)},
            {"stderr", io::number(v.std_error)},
            {"samples", v.samples},
            {"hits", v.hits},
            {"seed", v.seed},
            {"zero_volume", is_zero_volume(v)}};
}

json optimum_json(const CoolingOptimum& c) {
    return {{"heat", io::number(c.heat)},
            {"target", io::numbers(c.target.values())},
            {"order", io::one_based(c.order)},
            {"from_catalytic_set", c.from_catalytic_set}};
}

double catalyst_weight(const Options& o, const Problem& p) {
    const double g = o.gibbs_r.value_or(p.catalyst_gibbs.value_or(0.5));
    if (!(g > 0.0 && g < 1.0)) throw UsageError("catalyst_gibbs must lie in (0,1)");
    return g;
}

std::string cmd_curve(const Options& o) {
    const Problem p = load(o, true, false);
    const SlopeVector sv = beta_order(p.state, p.spec);
    const TMCurve c = tm_curve(p.state, p.spec);
    if (o.format == "csv") {
        std::ostringstream s;
        s << "x,y\n";
        for (const Point& e : c.elbows())
            s << format_number(e.x, kCsvDigits) << ',' << format_number(e.y, kCsvDigits) << '\n';
        return s.str();
    }
    json elbows = json::array();
    for (const Point& e : c.elbows()) elbows.push_back({io::number(e.x), io::number(e.y)});
    return io::dump({{"order", io::one_based(sv.order)},
                     {"slopes", io::numbers(sv.slopes)},
                     {"curve", elbows}});
}

std::string cmd_compare(const Options& o) {
    const Problem p = load(o, true, true);
    return io::dump({{"relation", to_string(compare(p.state, *p.target, p.spec))}});
}

std::string cmd_cone(const Options& o) {
    const Problem p = load(o, true, false);
    const ConeVertices cv = future_cone_vertices(p.state, p.spec);
    if (o.format == "csv") return vertices_csv(cv);
    return io::dump({{"vertices", vertices_json(cv)}});
}

std::string cmd_catalysable(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required");
    const io::StateFile f = io::read_state_file(o.input);
    const Problem p = load(o, true, f.target.has_value());
    json j = {{"vertices", vertices_json(c_plus_vertices(p.state, p.spec))}};
    if (p.target) {
        const Dist& q = *p.target;
        j["target"] = {{"relation", to_string(compare(p.state, q, p.spec))},
                       {"catalytic_condition", catalytic_condition(p.state, q, p.spec)},
                       {"future_member", catalysable_future_member(q, p.state, p.spec)},
                       {"past_member", catalysable_past_member(q, p.state, p.spec)}};
    }
    return io::dump(j);
}

std::string cmd_dimbound(const Options& o) {
    const Problem p = load(o, true, true);
    const DimBound db = dim_bound(p.state, *p.target, p.spec);
    json lp = json::array();
    for (std::size_t l : db.l_prime) lp.push_back(l);
    return io::dump({{"a", io::number(db.a)},
                     {"b", io::number(db.b)},
                     {"k_star", io::number(db.k_star)},
                     {"catalysis_possible", db.catalysis_possible()},
                     {"L", {io::number(db.m), io::number(db.n)}},
                     {"L_prime", lp}});
}

std::string cmd_qubit_window(const Options& o) {
    const Problem p = load(o, true, true);
    const double g = catalyst_weight(o, p);
    return io::dump(windows_json(qubit_window(p.state, *p.target, p.spec, g), g));
}

std::string cmd_search(const Options& o) {
    const Problem p = load(o, true, true);
    const double g = catalyst_weight(o, p);
    const auto ts = search_qubit_catalyst(p.state, *p.target, p.spec, g, o.grid);
    json j = {{"gibbs_r", io::number(g)}, {"grid_n", o.grid}, {"t", io::numbers(ts)}};
    if (compare(p.state, *p.target, p.spec) == Relation::Incomparable)
        j["window"] = windows_json(qubit_window(p.state, *p.target, p.spec, g), g);
    return io::dump(j);
}

std::string cmd_oracle(const Options& o) {
    const Problem p = load(o, true, true);
    const OracleReport r = oracle_check(p.state, *p.target, p.spec, o.max_den);
    json nums = json::array();
    for (auto n : r.gibbs.numerators) nums.push_back(n);
    return io::dump({{"embedded", r.embedded},
                     {"direct", r.direct},
                     {"agree", r.agree()},
                     {"delta", io::number(r.delta)},
                     {"min_gap", io::number(r.min_gap)},
                     {"inconclusive", r.inconclusive},
                     {"denominator", r.gibbs.denominator},
                     {"numerators", nums}});
}

std::string cmd_volume(const Options& o) {
    const Problem p = load(o, true, false);
    const Region region = parse_region(o.region);
    const VolumeEstimate v = mc_volume(p.state, p.spec, region, o.samples, o.seed);
    json j = estimate_json(v);
    j["region"] = to_string(region);
    return io::dump(j);
}

std::string beta_tag(double b) {
    std::string s = format_number(b, kCsvDigits);
    for (char& c : s) {
        if (c == '.') c = 'p';
    }
    return s;
}

std::string cmd_isovolume(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required");
    const io::StateFile f = io::read_state_file(o.input);
    const IsoMethod method = o.exact ? IsoMethod::Exact : IsoMethod::MonteCarlo;
    std::vector<double> betas = o.betas;
    if (betas.empty()) betas.push_back(o.beta.value_or(f.beta));
    if (betas.size() == 1 && o.out_dir.empty()) {
        std::ostringstream s;
        write_isovolume_csv(s, isovolume_grid(EnergySpectrum(f.energies, betas[0]), o.resolution,
                                              o.samples, o.seed, method));
        return s.str();
    }
    if (o.out_dir.empty()) throw UsageError("several --betas need --out-dir");
    std::filesystem::create_directories(o.out_dir);
    json written = json::array();
    for (double b : betas) {
        const auto path = std::filesystem::path(o.out_dir) / ("isovolume_beta" + beta_tag(b) + ".csv");
        std::ofstream file(path);
        if (!file) throw UsageError("cannot write '" + path.string() + "'");
        write_isovolume_csv(file, isovolume_grid(EnergySpectrum(f.energies, b), o.resolution,
                                                 o.samples, o.seed, method));
        written.push_back(path.filename().string());
    }
    return io::dump({{"files", written}});
}

std::string cmd_entangle(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required");
    const io::StateFile f = io::read_state_file(o.input);
    if (f.energies != std::vector<double>{0.0, 1.0, 1.0, 2.0})
        throw UsageError(o.input + ": entanglement needs energies [0, 1, 1, 2]");
    const Problem p = load(o, true, false);
    const double beta = p.spec.beta();
    const bool tn = in_TN(p.state, beta);
    return io::dump({{"witness", io::number(entanglement_witness(p.state))},
                     {"unitary_entanglable", unitary_entanglable(p.state)},
                     {"in_TN", tn},
                     {"in_CN", tn && in_CN(p.state, beta, o.interior, o.seed)}});
}

std::string cmd_entangle_volumes(const Options& o) {
    std::vector<double> betas = o.betas;
    if (betas.empty()) betas = {0.0, 0.25, 0.5, 1.0, 2.0};
    std::ostringstream s;
    s << "beta,V_TN,V_CN,ratio,ratio_stderr\n";
    for (double b : betas) {
        const EntanglementVolumes v = volume_ratio_CN_TN(b, o.samples, o.seed, o.interior);
        s << format_number(b, kCsvDigits) << ',' << format_number(v.tn.value, kCsvDigits) << ','
          << format_number(v.cn.value, kCsvDigits) << ',' << format_number(v.ratio, kCsvDigits)
          << ',' << format_number(v.ratio_std_error, kCsvDigits) << '\n';
    }
    return s.str();
}

std::string cmd_cooling(const Options& o) {
    const Problem p = load(o, true, false);
    const CoolingReport r = cooling_report(p.state, p.spec);
    return io::dump({{"q_c", io::number(r.q_c())},
                     {"target", io::numbers(r.thermal.target.values())},
                     {"order", io::one_based(r.thermal.order)},
                     {"q_c_catalytic_bound", io::number(r.q_c_catalytic())},
                     {"catalytic_bound", optimum_json(r.catalytic_bound)}});
}

std::string cmd_cooling_critical(const Options& o) {
    std::vector<double> betas = o.betas;
    if (betas.empty()) betas.push_back(o.beta.value_or(1.0));
    std::ostringstream s;
    s << "d,beta,beta_h_down,beta_h_up\n";
    for (double b : betas) {
        double down = NAN;
        double up = NAN;
        if (o.linearised) {
            const CriticalBetas c = critical_hot_betas(o.d, b, true, o.j);
            down = c.beta_down;
            up = c.beta_up;
        } else {
            down = critical_hot_beta(o.d, b, CriticalBoundary::Down, o.j).value_or(NAN);
            up = critical_hot_beta(o.d, b, CriticalBoundary::Up, o.j).value_or(NAN);
        }
        s << o.d << ',' << format_number(b, kCsvDigits) << ',' << format_number(down, kCsvDigits)
          << ',' << format_number(up, kCsvDigits) << '\n';
    }
    return s.str();
}

void add_io(CLI::App* sub, Options& o, bool formats = false) {
    sub->add_option("-i,--input", o.input, "JSON state file")->required();
    sub->add_option("-o,--out", o.out, "Write the result to this file");
    sub->add_option("--beta", o.beta, "Override the inverse temperature of the input");
    if (formats)
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_sampling(CLI::App* sub, Options& o) {
    sub->add_option("--samples", o.samples, "Monte-Carlo samples");
    sub->add_option("--seed", o.seed, "Random seed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Thermomajorisation, thermal cones and catalysable regions", "thermocone"};
    app.require_subcommand(1);
    std::function<std::string()> action;
    auto bind = [&](CLI::App* sub, std::string (*fn)(const Options&)) {
        sub->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
    };

    auto* curve = app.add_subcommand("curve", "Thermomajorisation curve, β-order and slopes");
    add_io(curve, o, true);
    bind(curve, cmd_curve);

    auto* cmp = app.add_subcommand("compare", "Relation between state and target");
    add_io(cmp, o);
    bind(cmp, cmd_compare);

    auto* cone = app.add_subcommand("cone", "Extreme points of the future thermal cone");
    add_io(cone, o, true);
    bind(cone, cmd_cone);

    auto* cat = app.add_subcommand("catalysable", "Catalysable-future vertices and target membership");
    add_io(cat, o);
    bind(cat, cmd_catalysable);

    auto* db = app.add_subcommand("dimbound", "Catalyst dimension bound (a, b, k*)");
    add_io(db, o);
    bind(db, cmd_dimbound);

    auto* qw = app.add_subcommand("qubit-window", "Necessary windows for qubit catalysts");
    add_io(qw, o);
    qw->add_option("--gibbs-r", o.gibbs_r, "Excited-state Gibbs weight of the catalyst");
    bind(qw, cmd_qubit_window);

    auto* sc = app.add_subcommand("search-catalyst", "Grid search over qubit catalysts");
    add_io(sc, o);
    sc->add_option("--gibbs-r", o.gibbs_r, "Excited-state Gibbs weight of the catalyst");
    sc->add_option("--grid", o.grid, "Grid size")->check(CLI::Range(2, 1000000));
    bind(sc, cmd_search);

    auto* oc = app.add_subcommand("oracle-check", "Compare against the embedded classical majorisation");
    add_io(oc, o);
    oc->add_option("--max-denominator", o.max_den, "Largest common denominator")
        ->check(CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1000000)));
    bind(oc, cmd_oracle);

    auto* vol = app.add_subcommand("volume", "Monte-Carlo relative volume of a region");
    add_io(vol, o);
    add_sampling(vol, o);
    vol->add_option("--region", o.region, "C+, C-, T+, T- or T0")
        ->check(CLI::IsMember({"C+", "C-", "T+", "T-", "T0"}));
    bind(vol, cmd_volume);

    auto* iso = app.add_subcommand("isovolume", "V(C+) over a barycentric grid (d = 3), CSV");
    add_io(iso, o);
    add_sampling(iso, o);
    iso->add_option("--betas", o.betas, "Several inverse temperatures (needs --out-dir)");
    iso->add_option("--out-dir", o.out_dir, "Directory for one CSV per beta");
    iso->add_option("--resolution", o.resolution, "Grid subdivisions")->check(CLI::Range(1, 1000));
    iso->add_flag("--exact", o.exact, "Exact polygon areas instead of Monte-Carlo");
    bind(iso, cmd_isovolume);

    auto* ent = app.add_subcommand("entangle", "Two-qubit entanglability report");
    add_io(ent, o);
    ent->add_option("--interior-samples", o.interior, "Interior samples for the CN test");
    ent->add_option("--seed", o.seed, "Random seed");
    bind(ent, cmd_entangle);

    auto* ev = app.add_subcommand("entangle-volumes", "V(TN), V(CN) and their ratio per beta, CSV");
    ev->add_option("-o,--out", o.out, "Write the result to this file");
    ev->add_option("--betas", o.betas, "Inverse temperatures");
    ev->add_option("--interior-samples", o.interior, "Interior samples per CN test")
        ->default_val(0);
    add_sampling(ev, o);
    bind(ev, cmd_entangle_volumes);

    auto* cool = app.add_subcommand("cooling", "Optimal heat extraction with and without a catalyst");
    add_io(cool, o);
    bind(cool, cmd_cooling);

    auto* cc = app.add_subcommand("cooling-critical", "Critical hot inverse temperatures, CSV");
    cc->add_option("-o,--out", o.out, "Write the result to this file");
    cc->add_option("--d", o.d, "Number of levels")->check(CLI::Range(2, 64));
    cc->add_option("--beta", o.beta, "Cold inverse temperature");
    cc->add_option("--betas", o.betas, "Several cold inverse temperatures");
    cc->add_option("--j", o.j, "Population index j (1-based)");
    cc->add_flag("--linearised", o.linearised, "Use the small-beta closed forms");
    bind(cc, cmd_cooling_critical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::string result = action();
        if (o.out.empty()) {
            out << result;
        } else {
            std::ofstream file(o.out, std::ios::binary);
            if (!file) throw UsageError("cannot write '" + o.out + "'");
            file << result;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace thermocone::cli
