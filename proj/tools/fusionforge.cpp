// fusionforge: batch front-end for fusion-ring enumeration, categorification
// criteria, the ring catalog, and pentagon-equation systems.

#include "CLI11.hpp"
#include "json.hpp"

#include "fusion/catalog.hpp"
#include "fusion/criteria.hpp"
#include "fusion/enumerate.hpp"
#include "fusion/pentagon.hpp"
#include "fusion/ring_io.hpp"
#include "fusion/solutions.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fusion;

namespace {

constexpr const char* kVersion = "fusionforge 1.0.0";

int thread_cap(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FUSIONFORGE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return (int)std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) { h ^= c; h *= 0x100000001b3ull; }
    return h;
}

FusionRing resolve_ring(const std::string& key) {
    if (fs::exists(key)) return ring_from_file(key);
    return lookup(key).ring;
}

json manifest_base(const std::string& command, const json& params) {
    json m;
    m["command"] = command;
    m["parameters"] = params;
    m["version"] = kVersion;
    return m;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream f(out_path);
        f << j.dump(1) << "\n";
    }
}

int cmd_enumerate(int rank, const std::string& out_dir, bool allow_large, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    EnumerateOptions opt;
    opt.allow_large_rank = allow_large;
    opt.threads = thread_cap(threads);
    auto rings = enumerate_rings(rank, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json man = manifest_base("enumerate", json{{"rank", rank}});
    man["count"] = rings.size();
    man["wall_time_seconds"] = secs;
    json items = json::array();
    fs::path dir;
    if (!out_dir.empty()) {
        dir = out_dir;
        fs::create_directories(dir);
    }
    int idx = 0;
    for (auto& ring : rings) {
        ++idx;
        std::string name = "rank" + std::to_string(rank) + "-" + std::to_string(idx);
        FusionRing labeled = ring;
        labeled.set_label(name);
        std::string payload = ring_to_json(labeled, 1);
        json item;
        item["name"] = name;
        item["checksum"] = fnv64(payload);
        if (!out_dir.empty()) {
            std::string file = name + ".json";
            std::ofstream f(dir / file);
            f << payload << "\n";
            item["file"] = file;
        }
        items.push_back(std::move(item));
    }
    man["results"] = std::move(items);
    if (!out_dir.empty()) {
        std::ofstream f(dir / "manifest.json");
        f << man.dump(1) << "\n";
        std::cout << "wrote " << rings.size() << " rings to " << out_dir << "\n";
    } else {
        std::cout << man.dump(1) << "\n";
    }
    return 0;
}

json report_json_for(const FusionRing& ring, const CriteriaReport& rep) {
    json j = json::parse(rep.to_json());
    j["rank"] = ring.rank();
    if (!ring.label().empty()) j["ring"] = ring.label();
    return j;
}

int cmd_check(const std::string& key, const std::vector<std::string>& criteria,
              const std::string& out_path) {
    FusionRing ring = resolve_ring(key);
    AxiomReport ax = verify_axioms(ring);
    if (!ax.pass) {
        std::cerr << "input is not a valid fusion ring: " << ax.axiom << " ("
                  << ax.message << ")\n";
        return 1;
    }
    ClassifyOptions opt;
    if (!criteria.empty()) {
        opt.run_isaacs = false;
        for (const auto& c : criteria)
            if (c == "isaacs") opt.run_isaacs = true;
    }
    CriteriaReport rep = classify(ring, opt);
    json j = report_json_for(ring, rep);
    if (!criteria.empty()) {
        json filtered;
        filtered["summary"] = j["summary"];
        for (const auto& c : criteria)
            if (j.contains(c)) filtered[c] = j[c];
        filtered["rank"] = j["rank"];
        if (j.contains("ring")) filtered["ring"] = j["ring"];
        j = filtered;
    }
    emit(j, out_path);
    return rep.summary == Summary::NoObstruction ? 0 : 2;
}

int cmd_classify_all(const std::string& out_path, int threads, bool run_isaacs) {
    const auto& cat = load_catalog();
    std::vector<const CatalogEntry*> targets;
    for (const auto& e : cat)
        if (e.ring.rank() <= 6) targets.push_back(&e);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<json> rows(targets.size());
    std::atomic<size_t> next{0};
    int nthreads = thread_cap(threads);
    auto worker = [&]() {
        while (true) {
            size_t w = next.fetch_add(1);
            if (w >= targets.size()) break;
            const CatalogEntry& e = *targets[w];
            ClassifyOptions opt;
            opt.run_isaacs = run_isaacs;
            CriteriaReport rep = classify(e.ring, opt);
            json j = report_json_for(e.ring, rep);
            j["id"] = e.id;
            j["starred"] = e.starred;
            j["model"] = e.model;
            rows[w] = std::move(j);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int no_obstruction = 0;
    for (auto& r : rows)
        if (r["summary"] == "no_obstruction") ++no_obstruction;
    json man = manifest_base("classify-all", json{{"isaacs", run_isaacs}});
    man["wall_time_seconds"] = secs;
    man["total"] = rows.size();
    man["no_obstruction"] = no_obstruction;
    man["ruled_out"] = (int)rows.size() - no_obstruction;
    man["results"] = rows;
    emit(man, out_path);
    std::cerr << "classified " << rows.size() << " rings: " << no_obstruction
              << " admit no obstruction, " << rows.size() - no_obstruction
              << " ruled out (" << secs << " s)\n";
    return (no_obstruction == 47 && rows.size() == 72) ? 0 : 1;
}

json assignment_to_json(const PentagonSystem& sys, const Assignment& a) {
    json j = json::object();
    for (const auto& v : sys.variables) {
        if (v.kind == VariableKind::Pinned) continue;
        auto it = a.value.find(v.orbit_id);
        if (it == a.value.end()) continue;
        j[label_str(v.one_line)] = {it->second.real(), it->second.imag()};
    }
    return j;
}

Assignment assignment_from_json(const PentagonSystem& sys, const json& j, bool unitary) {
    std::map<std::string, std::complex<double>> vals;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto arr = it.value();
        vals[it.key()] = std::complex<double>(arr.at(0).get<double>(),
                                              arr.at(1).get<double>());
    }
    return assignment_from_labels(sys, vals, unitary);
}

int cmd_pentagon(const std::string& action, const std::string& key,
                 const std::string& solution_file, double tol, bool unitary_mode,
                 int branch_limit, int max_depth, const std::string& out_path) {
    FusionRing ring = resolve_ring(key);
    PentagonSystem sys = build_system(ring);
    if (action == "build") {
        emit(json::parse(sys.to_json()), out_path);
        return 0;
    }
    if (action == "verify") {
        Assignment a;
        if (!solution_file.empty()) {
            std::ifstream f(solution_file);
            if (!f) { std::cerr << "cannot open " << solution_file << "\n"; return 1; }
            json j;
            f >> j;
            a = assignment_from_json(sys, j, unitary_mode);
        } else {
            const PublishedSolution* found = nullptr;
            for (const auto& s : published_solutions())
                if (s.catalog_id == ring.label()) { found = &s; break; }
            if (!found) {
                std::cerr << "no --solution given and no published solution for this ring\n";
                return 1;
            }
            a = published_assignment(sys, *found);
        }
        VerifyReport rep = verify_assignment(sys, a, tol, unitary_mode);
        json j;
        j["max_residual"] = rep.max_residual;
        j["tolerance"] = tol;
        j["pass"] = rep.pass(tol);
        j["unitary"] = rep.unitary;
        j["equations_checked"] = rep.equations_checked;
        emit(j, out_path);
        return rep.pass(tol) ? 0 : 2;
    }
    if (action == "solve") {
        SolveOptions opt;
        opt.tol = tol;
        opt.branch_limit = branch_limit;
        opt.max_depth = max_depth;
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = localized_solve(sys, opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json j = manifest_base("pentagon solve", json{{"tol", tol},
                                                      {"branch_limit", branch_limit},
                                                      {"max_depth", max_depth}});
        j["wall_time_seconds"] = secs;
        j["branches_explored"] = res.branches_explored;
        j["branch_limit_hit"] = res.branch_limit_hit;
        json sols = json::array();
        for (const auto& a : res.solutions) sols.push_back(assignment_to_json(sys, a));
        j["solutions"] = std::move(sols);
        emit(j, out_path);
        return res.solutions.empty() && res.branch_limit_hit ? 2 : 0;
    }
    std::cerr << "unknown pentagon action: " << action << "\n";
    return 1;
}

json entry_json(const CatalogEntry& e, bool with_matrices) {
    json j;
    j["id"] = e.id;
    j["rank"] = e.ring.rank();
    j["fpdim"] = e.fpdim;
    j["fpdim_display"] = e.fpdim_display;
    j["type"] = e.type_vector;
    j["starred"] = e.starred;
    j["commutative"] = e.commutative;
    j["annotations"] = e.annotations;
    if (!e.witness.empty()) j["zero_spectrum_witness"] = e.witness;
    if (!e.model.empty()) {
        j["model"] = e.model;
        j["model_conjectural"] = e.model_conjectural;
    }
    if (!e.properties.empty()) j["properties"] = e.properties;
    if (!e.codegrees.empty()) {
        json cods = json::array();
        for (const auto& c : e.codegrees) {
            json cj;
            if (c.kind == CodegreeKind::Rational) {
                cj["multiplicity"] = c.mult;
                cj["value"] = (double)c.a / (double)c.c;
                cj["exact"] = std::to_string(c.a) + (c.c != 1 ? "/" + std::to_string(c.c) : "");
            } else if (c.kind == CodegreeKind::Quadratic) {
                cj["multiplicity"] = c.mult;
                cj["value"] = (c.a + c.b * std::sqrt((double)c.m)) / c.c;
                cj["exact"] = "(" + std::to_string(c.a) + (c.b >= 0 ? "+" : "") +
                              std::to_string(c.b) + "*sqrt(" + std::to_string(c.m) + "))/" +
                              std::to_string(c.c);
            } else {
                cj["polynomial"] = c.poly;
                json roots = json::array();
                for (auto& [v, m] : c.roots) roots.push_back({v, m});
                cj["roots"] = roots;
            }
            cods.push_back(std::move(cj));
        }
        j["formal_codegrees"] = std::move(cods);
    }
    if (with_matrices) j["ring"] = json::parse(ring_to_json(e.ring));
    return j;
}

int cmd_catalog(const std::string& action, const std::string& key, int rank_filter,
                bool starred_only, bool excluded_only, const std::string& format,
                const std::string& out_path) {
    const auto& cat = load_catalog();
    if (action == "show") {
        const CatalogEntry& e = lookup(key);
        emit(entry_json(e, true), out_path);
        return 0;
    }
    std::vector<const CatalogEntry*> rows;
    for (const auto& e : cat) {
        if (rank_filter > 0 && e.ring.rank() != rank_filter) continue;
        if (starred_only && !e.starred) continue;
        if (excluded_only && (e.starred || e.ring.rank() > 6)) continue;
        rows.push_back(&e);
    }
    if (action == "list") {
        for (const auto* e : rows) {
            std::cout << e->id << "\t rank " << e->ring.rank() << "\t FPdim "
                      << e->fpdim << (e->starred ? "\t *" : "\t  ") << "\t"
                      << (e->model.empty() ? e->properties : e->model) << "\n";
        }
        return 0;
    }
    if (action == "export") {
        if (format == "csv") {
            std::ostringstream os;
            os << "id,rank,fpdim,starred,commutative,model,annotations\n";
            for (const auto* e : rows) {
                std::string ann;
                for (const auto& a : e->annotations) ann += (ann.empty() ? "" : ";") + a;
                os << e->id << "," << e->ring.rank() << "," << e->fpdim << ","
                   << (e->starred ? 1 : 0) << "," << (e->commutative ? 1 : 0) << ",\""
                   << e->model << "\",\"" << ann << "\"\n";
            }
            if (out_path.empty()) std::cout << os.str();
            else std::ofstream(out_path) << os.str();
        } else {
            json arr = json::array();
            for (const auto* e : rows) arr.push_back(entry_json(*e, true));
            emit(arr, out_path);
        }
        return 0;
    }
    std::cerr << "unknown catalog action: " << action << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusionforge: multiplicity-one fusion rings, categorification "
                 "criteria, and pentagon-equation systems"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate fusion rings of a given rank");
    int rank = 0;
    std::string out_dir;
    bool allow_large = false;
    int threads = 0;
    enum_cmd->add_option("--rank", rank, "rank to enumerate")->required();
    enum_cmd->add_option("--out", out_dir, "output directory for ring files");
    enum_cmd->add_flag("--allow-large-rank", allow_large, "permit rank 7+ (experiments)");
    enum_cmd->add_option("--threads", threads, "worker threads (default: all)");

    auto* check_cmd = app.add_subcommand("check", "run categorification criteria on a ring");
    std::string check_key, check_out;
    std::vector<std::string> criteria_list;
    check_cmd->add_option("ring", check_key, "ring JSON file or catalog id")->required();
    check_cmd->add_option("--criteria", criteria_list,
                          "subset of criteria to report")->delimiter(',');
    check_cmd->add_option("--out", check_out, "write the report to a file");

    auto* call_cmd = app.add_subcommand("classify-all", "classify the whole catalog");
    std::string call_out;
    int call_threads = 0;
    bool no_isaacs = false;
    call_cmd->add_option("--out", call_out, "write the full report to a file");
    call_cmd->add_option("--threads", call_threads, "worker threads");
    call_cmd->add_flag("--no-isaacs", no_isaacs, "skip the heuristic integrality test");

    auto* pent_cmd = app.add_subcommand("pentagon", "pentagon-equation systems");
    std::string pent_action, pent_key, solution_file, pent_out;
    double tol = 1e-10;
    bool unitary_mode = false;
    int branch_limit = 4096, max_depth = 3;
    pent_cmd->add_option("action", pent_action, "build | verify | solve")->required();
    pent_cmd->add_option("ring", pent_key, "ring JSON file or catalog id")->required();
    pent_cmd->add_option("--solution", solution_file, "assignment JSON (label -> [re, im])");
    pent_cmd->add_option("--tol", tol, "residual tolerance");
    pent_cmd->add_flag("--unitary-mode", unitary_mode,
                       "derive reflection partners by conjugation");
    pent_cmd->add_option("--branch-limit", branch_limit, "solver branch limit");
    pent_cmd->add_option("--max-depth", max_depth, "solver staging depth");
    pent_cmd->add_option("--out", pent_out, "write output to a file");

    auto* cat_cmd = app.add_subcommand("catalog", "browse the embedded ring catalog");
    std::string cat_action, cat_key, cat_format = "json", cat_out;
    int cat_rank = 0;
    bool cat_starred = false, cat_excluded = false;
    cat_cmd->add_option("action", cat_action, "list | show | export")->required();
    cat_cmd->add_option("key", cat_key, "entry id or model name (for show)");
    cat_cmd->add_option("--rank", cat_rank, "filter by rank");
    cat_cmd->add_flag("--starred", cat_starred, "only categorifiable entries");
    cat_cmd->add_flag("--excluded", cat_excluded, "only ruled-out entries");
    cat_cmd->add_option("--format", cat_format, "json | csv");
    cat_cmd->add_option("--out", cat_out, "write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enum_cmd) return cmd_enumerate(rank, out_dir, allow_large, threads);
        if (*check_cmd) return cmd_check(check_key, criteria_list, check_out);
        if (*call_cmd) return cmd_classify_all(call_out, call_threads, !no_isaacs);
        if (*pent_cmd)
            return cmd_pentagon(pent_action, pent_key, solution_file, tol, unitary_mode,
                                branch_limit, max_depth, pent_out);
        if (*cat_cmd)
            return cmd_catalog(cat_action, cat_key, cat_rank, cat_starred, cat_excluded,
                               cat_format, cat_out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
