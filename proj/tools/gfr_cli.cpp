// Command-line front end: generate, validate, route, verify, benchmark and
// render instances.  Exit codes: 0 success/delivered, 1 negative result
// (loop, unreachable, failed check), 2 usage or parse error.

#include <CLI11.hpp>

#include <gfr/agent.hpp>
#include <gfr/instance.hpp>
#include <gfr/oracle.hpp>
#include <gfr/svg.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace gfr;

namespace {

int run_route(const std::string& path, const std::string& algo, bool show_trace,
              const std::string& format) {
    InstanceFile inst = load(path);
    EmbeddedGraph g = inst.build();
    RouteResult r;
    if (algo == "gfr") r = gfr_route(g);
    else if (algo == "msfr") r = msfr_route(g);
    else if (algo == "fr") r = classic_fr(g);
    else {
        std::cerr << "unknown algorithm " << algo << "\n";
        return 2;
    }
    if (format == "text") {
        std::cout << algo << ": " << route_outcome_name(r.outcome) << " after "
                  << r.traversal_count << " traversals, peak memory " << r.peak_memory_bits
                  << " bits, " << r.ntbw_visits << " non-trivial walks, "
                  << r.triples_recorded << " triples\n";
        return r.outcome == RouteOutcome::Delivered ? 0 : 1;
    }
    std::cout << "algo=" << algo << "\n";
    std::cout << "outcome=" << route_outcome_name(r.outcome) << "\n";
    std::cout << "traversals=" << r.traversal_count << "\n";
    std::cout << "peak_memory_bits=" << r.peak_memory_bits << "\n";
    std::cout << "ntbw_visits=" << r.ntbw_visits << "\n";
    std::cout << "triples_recorded=" << r.triples_recorded << "\n";
    if (!r.note.empty()) std::cout << "note=" << r.note << "\n";
    if (show_trace)
        for (const TraceStep& ts : r.trace) {
            std::cout << "step=" << ts.step << " node=" << ts.node << " edge=" << de_edge(ts.edge)
                      << (de_forward(ts.edge) ? "+" : "-") << " phase=" << phase_name(ts.phase)
                      << " counters=";
            for (size_t i = 0; i < ts.counters.size(); ++i)
                std::cout << (i ? "," : "") << ts.counters[i];
            std::cout << "\n";
        }
    return r.outcome == RouteOutcome::Delivered ? 0 : 1;
}

// All oracle checks on one instance; prints one record per check.
bool verify_one(const std::string& label, const InstanceFile& inst) {
    bool all = true;
    auto emit = [&](const std::string& check, bool pass, const std::string& witness) {
        std::cout << "check=" << check << " instance=" << label << " pass=" << (pass ? 1 : 0);
        if (!witness.empty()) std::cout << " witness=" << witness;
        std::cout << "\n";
        all = all && pass;
    };
    EmbeddedGraph g;
    try {
        g = inst.build();
        emit("validate", true, "");
    } catch (const gfr_error& e) {
        emit("validate", false, e.what());
        return false;
    }
    RegionDecomposition rd = compute_regions(g);
    GammaGraph gg = gamma_graph(g, rd);
    PropositionReport prop = check_proposition(g, rd, gg);
    emit("gamma_bound", prop.ntbw_count <= 2 * g.genus(),
         "N=" + std::to_string(prop.ntbw_count) + " g=" + std::to_string(g.genus()));
    emit("counting", prop.ntbw_count - prop.nontrivial_regions <= g.genus() &&
                         prop.nontrivial_regions <= g.genus(),
         "N=" + std::to_string(prop.ntbw_count) + " k=" + std::to_string(prop.nontrivial_regions));
    emit("proposition_path", prop.pass, prop.vacuous ? "vacuous" : prop.detail);
    GammaStarReport gs = check_gamma_star(g, rd, gg);
    emit("gamma_star", gs.pass, gs.vacuous ? "vacuous" : gs.detail);
    FormReport fr = check_form_properties(g, rd, 40);
    emit("intersection_form", fr.pass, "rank=" + std::to_string(fr.rank));
    bool capping_pass = true;
    int capping_checked = 0;
    for (size_t w = 0; w < g.walks.size() && capping_checked < 8; ++w) {
        if (!g.walks[w].nonzero_homology()) continue;
        ++capping_checked;
        CappingReport cr = check_capping_identity(g, static_cast<int>(w));
        capping_pass = capping_pass && cr.pass;
    }
    emit("capping_identity", capping_pass,
         capping_checked ? std::to_string(capping_checked) + " cycles" : "vacuous");
    // agent against oracle
    RouteResult r = gfr_route(g, -1, false);
    emit("gfr_delivers", r.outcome == RouteOutcome::Delivered, route_outcome_name(r.outcome));
    bool visits_ok = true;
    for (const std::string& key : r.ntbw_keys) {
        bool known = false;
        for (int w : gg.vertices) known = known || g.walks[static_cast<size_t>(w)].key == key;
        visits_ok = visits_ok && known;
    }
    emit("visits_in_gamma", visits_ok, std::to_string(r.ntbw_visits) + " visits");
    emit("locality", r.locality_violations == 0, "");
    NtbwEquivalenceReport eq = ntbw_equivalence_report(g, rd);
    // reported, never failing
    std::cout << "check=ntbw_equivalence instance=" << label << " pass=1 witness=agree="
              << eq.agree << ",disagree=" << eq.disagree << "\n";
    return all;
}

int run_bench(const std::vector<int>& genus_list, const std::vector<int>& size_list, int runs,
              uint64_t seed) {
    double max_traversal_ratio = 0, max_memory_ratio = 0;
    bool all_delivered = true;
    for (int g : genus_list)
        for (int n : size_list)
            for (int k = 0; k < runs; ++k) {
                uint64_t row_seed = seed + 1000ull * static_cast<uint64_t>(k) +
                                    31ull * static_cast<uint64_t>(g) +
                                    7ull * static_cast<uint64_t>(n);
                InstanceFile inst;
                try {
                    inst = random_instance(g, n, row_seed);
                } catch (const gfr_error& e) {
                    std::cout << "g=" << g << " n=" << n << " seed=" << row_seed
                              << " generation=failed note=" << e.what() << "\n";
                    continue;
                }
                EmbeddedGraph eg = inst.build();
                RouteResult r = gfr_route(eg, -1, false);
                bool delivered = r.outcome == RouteOutcome::Delivered;
                all_delivered = all_delivered && delivered;
                double tr = static_cast<double>(r.traversal_count) /
                            (static_cast<double>(g + 1) * (g + 1) * n * n);
                double mr = static_cast<double>(r.peak_memory_bits) /
                            ((g + 1) * std::log2(static_cast<double>(n) + 2));
                max_traversal_ratio = std::max(max_traversal_ratio, tr);
                max_memory_ratio = std::max(max_memory_ratio, mr);
                std::cout << "g=" << g << " n=" << n << " seed=" << row_seed
                          << " traversals=" << r.traversal_count
                          << " peak_bits=" << r.peak_memory_bits
                          << " ntbw_visits=" << r.ntbw_visits
                          << " delivered=" << (delivered ? 1 : 0) << "\n";
            }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "summary max_traversals_over_g1sq_nsq=%.4f max_peak_bits_over_g1_log2n=%.4f "
                  "all_delivered=%d",
                  max_traversal_ratio, max_memory_ratio, all_delivered ? 1 : 0);
    std::cout << buf << "\n";
    return all_delivered ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized face routing on genus-g surfaces"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    int gen_g = 1, gen_n = 12;
    uint64_t gen_seed = 1;
    std::string gen_out = "instance.gfri";
    std::string gen_kind = "random";
    gen->add_option("-g,--genus", gen_g, "surface genus");
    gen->add_option("-n,--nodes", gen_n, "node count");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--kind", gen_kind, "random | fr-trap | fig2");
    gen->add_option("-o,--out", gen_out, "output path");

    // validate
    auto* val = app.add_subcommand("validate", "validate an instance file");
    std::string val_in;
    val->add_option("--instance", val_in, "instance path")->required();

    // route
    auto* rt = app.add_subcommand("route", "run a routing algorithm");
    std::string rt_in, rt_algo = "gfr", rt_format = "records";
    bool rt_trace = false;
    rt->add_option("--instance", rt_in, "instance path")->required();
    rt->add_option("--algo", rt_algo, "gfr | msfr | fr");
    rt->add_option("--format", rt_format, "records | text");
    rt->add_flag("--trace", rt_trace, "print the step trace");

    // verify
    auto* ver = app.add_subcommand("verify", "run the topology oracle checks");
    std::string ver_in, ver_corpus;
    ver->add_option("--instance", ver_in, "instance path");
    ver->add_option("--corpus", ver_corpus, "directory of .gfri files");

    // bench
    auto* ben = app.add_subcommand("bench", "benchmark over generated instances");
    std::string ben_genus = "0,1,2", ben_sizes = "50";
    int ben_runs = 1;
    uint64_t ben_seed = 1;
    ben->add_option("--genus-list", ben_genus, "comma-separated genus values");
    ben->add_option("--size-list", ben_sizes, "comma-separated node counts");
    ben->add_option("--runs", ben_runs, "rows per (g, n)");
    ben->add_option("--seed", ben_seed, "base seed");

    // render
    auto* ren = app.add_subcommand("render", "render an instance to SVG");
    std::string ren_in, ren_out = "out.svg";
    bool ren_trace = false;
    ren->add_option("--instance", ren_in, "instance path")->required();
    ren->add_option("-o,--out", ren_out, "output SVG path");
    ren->add_flag("--trace", ren_trace, "overlay the gfr trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 2;
    }

    try {
        if (gen->parsed()) {
            InstanceFile inst;
            if (gen_kind == "random") inst = random_instance(gen_g, gen_n, gen_seed);
            else if (gen_kind == "fr-trap") inst = fr_trap(std::max(1, gen_g));
            else if (gen_kind == "fig2") inst = fig2_instance();
            else {
                std::cerr << "unknown kind " << gen_kind << "\n";
                return 2;
            }
            save(inst, gen_out);
            std::cout << "wrote=" << gen_out << " genus=" << inst.genus
                      << " nodes=" << inst.nodes.size() << " edges=" << inst.edges.size() << "\n";
            return 0;
        }
        if (val->parsed()) {
            InstanceFile inst = load(val_in);
            try {
                EmbeddedGraph g = inst.build();
                std::cout << "valid=1 genus=" << g.genus() << " nodes=" << g.node_count()
                          << " edges=" << g.edge_count() << "\n";
                return 0;
            } catch (const gfr_error& e) {
                std::cout << "valid=0 error=" << e.what() << "\n";
                return 1;
            }
        }
        if (rt->parsed()) return run_route(rt_in, rt_algo, rt_trace, rt_format);
        if (ver->parsed()) {
            bool all = true;
            if (!ver_in.empty()) all = verify_one(ver_in, load(ver_in)) && all;
            if (!ver_corpus.empty()) {
                std::vector<std::string> files;
                for (const auto& ent : std::filesystem::directory_iterator(ver_corpus))
                    if (ent.path().extension() == ".gfri") files.push_back(ent.path().string());
                std::sort(files.begin(), files.end());
                for (const std::string& f : files) all = verify_one(f, load(f)) && all;
            }
            if (ver_in.empty() && ver_corpus.empty()) {
                std::cerr << "verify needs --instance or --corpus\n";
                return 2;
            }
            std::cout << "all_checks=" << (all ? "pass" : "fail") << "\n";
            return all ? 0 : 1;
        }
        if (ben->parsed()) {
            auto parse_list = [](const std::string& s) {
                std::vector<int> out;
                std::string cur;
                for (char c : s + ",") {
                    if (c == ',') {
                        if (!cur.empty()) out.push_back(std::stoi(cur));
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                return out;
            };
            return run_bench(parse_list(ben_genus), parse_list(ben_sizes), ben_runs, ben_seed);
        }
        if (ren->parsed()) {
            InstanceFile inst = load(ren_in);
            EmbeddedGraph g = inst.build();
            RegionDecomposition rd = compute_regions(g);
            RenderOptions opt;
            opt.draw_trace = ren_trace;
            RouteResult rr;
            if (ren_trace) rr = gfr_route(g);
            std::ofstream f(ren_out, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open " << ren_out << "\n";
                return 2;
            }
            f << render_svg(g, rd, ren_trace ? &rr : nullptr, opt);
            std::cout << "wrote=" << ren_out << "\n";
            return 0;
        }
    } catch (const gfr_error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case Errc::ParseError:
            case Errc::VersionMismatch:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
