#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "steiner/cycle.hpp"
#include "steiner/generator.hpp"
#include "steiner/greedy.hpp"
#include "steiner/instance.hpp"
#include "steiner/oracle.hpp"
#include "steiner/streaming.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_input = 2;

steiner::instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(exit_input);
    }
    try {
        return steiner::instance::parse(in);
    } catch (const steiner::parse_error& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        std::exit(exit_input);
    }
}

std::string join_ids(const steiner::instance& inst, const std::vector<int>& idx) {
    std::string out;
    for (int i : idx) {
        if (!out.empty()) out += ' ';
        out += inst.items[static_cast<std::size_t>(i)].id;
    }
    return out;
}

int run_solve_cover(const std::string& path) {
    steiner::instance inst = load_instance(path);
    steiner::steiner_cover cover = steiner::steiner_path_cover(inst);
    for (const auto& p : cover.paths) std::cout << join_ids(inst, p) << "\n";
    std::cout << "witness cutset";
    for (int i : cover.witness.cutset) std::cout << " " << inst.items[static_cast<std::size_t>(i)].id;
    std::cout << "\n";
    std::cout << "witness s_islands " << cover.witness.s_island_count << "\n";
    return exit_ok;
}

int run_solve_cycle(const std::string& path) {
    steiner::instance inst = load_instance(path);
    steiner::cycle_outcome out = steiner::steiner_cycle(inst);
    if (out.cycle) {
        std::cout << "cycle " << join_ids(inst, *out.cycle) << "\n";
        return exit_ok;
    }
    std::cout << "no-cycle\n";
    std::cout << "witness cutset";
    for (int i : out.witness->cutset) std::cout << " " << inst.items[static_cast<std::size_t>(i)].id;
    std::cout << "\n";
    for (const auto& isl : out.witness->islands)
        std::cout << "island " << join_ids(inst, isl) << "\n";
    return exit_ok;
}

void print_events(const std::vector<steiner::stream_event>& events, bool cycle_mode) {
    for (const auto& ev : events) {
        switch (ev.kind) {
            case steiner::event_kind::place:
                std::cout << "place " << ev.id << "\n";
                break;
            case steiner::event_kind::place_q:
                std::cout << (cycle_mode ? "Q " : "place ") << ev.id << "\n";
                break;
            case steiner::event_kind::place_r:
                std::cout << (cycle_mode ? "R " : "place ") << ev.id << "\n";
                break;
            case steiner::event_kind::neglect:
                std::cout << "neglect " << ev.id << "\n";
                break;
            case steiner::event_kind::end_path:
                std::cout << "end-path\n";
                break;
            case steiner::event_kind::connector_via:
                std::cout << "connector " << ev.id << "\n";
                break;
            case steiner::event_kind::connector_direct:
                std::cout << "connector direct\n";
                break;
        }
    }
}

int run_stream(const std::string& path, const std::string& mode, std::optional<int> kappa_opt,
               bool stats) {
    steiner::instance inst = load_instance(path);
    bool cycle_mode = mode == "cycle";
    if (cycle_mode) {
        steiner::cycle_stats st;
        steiner::solve_cycle(inst, kappa_opt, &st);
        print_events(st.events, true);
        if (stats) std::cout << "peak_buffer " << st.peak_buffer << "\nreads " << st.reads << "\n";
    } else {
        steiner::cover_stats st;
        steiner::solve_cover(inst, kappa_opt, &st);
        print_events(st.events, false);
        if (stats) std::cout << "peak_buffer " << st.peak_buffer << "\nreads " << st.reads << "\n";
    }
    return exit_ok;
}

int run_oracle(const std::string& path) {
    steiner::instance inst = load_instance(path);
    try {
        std::cout << "pi_s " << steiner::brute_pi_s(inst) << "\n";
        std::cout << "cycle " << (steiner::brute_cycle_exists(inst) ? "yes" : "no") << "\n";
    } catch (const steiner::oracle_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}

int run_verify(const std::string& path) {
    steiner::instance inst = load_instance(path);
    std::vector<int> cutset;
    std::vector<std::vector<int>> islands;
    long long s_islands = -1;
    bool have_island_lines = false;
    bool bad = false;
    auto to_index = [&](const std::string& id) {
        auto it = inst.index_of.find(id);
        if (it == inst.index_of.end()) {
            bad = true;
            return -1;
        }
        return it->second;
    };
    std::string line;
    while (std::getline(std::cin, line)) {
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;
        if (word == "witness") {
            std::string kind;
            if (!(ss >> kind)) { bad = true; continue; }
            if (kind == "cutset") {
                std::string id;
                while (ss >> id) cutset.push_back(to_index(id));
            } else if (kind == "s_islands") {
                if (!(ss >> s_islands)) bad = true;
            } else {
                bad = true;
            }
        } else if (word == "island") {
            have_island_lines = true;
            std::vector<int> isl;
            std::string id;
            while (ss >> id) isl.push_back(to_index(id));
            if (isl.empty()) bad = true;
            islands.push_back(std::move(isl));
        }
        // other lines (solver output preceding the witness) are ignored
    }
    bool ok = false;
    if (!bad) {
        if (have_island_lines) {
            ok = steiner::verify_cycle_witness(inst, cutset, islands);
        } else if (s_islands >= 0) {
            long long claimed = s_islands - static_cast<long long>(cutset.size());
            ok = steiner::verify_cover_witness(inst, claimed, cutset,
                                               static_cast<std::size_t>(s_islands));
        }
    }
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? exit_ok : exit_invalid;
}

int run_gen(int n, std::uint64_t seed, long long range, long long max_len,
            const std::string& terminals) {
    steiner::gen_params p;
    p.n = n;
    p.seed = seed;
    p.coord_range = range;
    p.max_len = max_len;
    std::size_t slash = terminals.find('/');
    try {
        if (slash == std::string::npos) {
            p.frac_num = std::stoi(terminals);
            p.frac_den = 1;
        } else {
            p.frac_num = std::stoi(terminals.substr(0, slash));
            p.frac_den = std::stoi(terminals.substr(slash + 1));
        }
    } catch (...) {
        std::cerr << "error: --terminals expects a fraction like 1/2\n";
        return exit_input;
    }
    try {
        steiner::generate(p).serialize(std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}

int run_play(const std::string& path) {
    steiner::instance inst = load_instance(path);
    steiner::play_trace tr = steiner::play_level(inst);
    for (const auto& mv : tr.moves) {
        switch (mv.kind) {
            case steiner::play_kind::jump: std::cout << "jump " << mv.id << "\n"; break;
            case steiner::play_kind::remember: std::cout << "remember " << mv.id << "\n"; break;
            case steiner::play_kind::neglect: std::cout << "neglect " << mv.id << "\n"; break;
            case steiner::play_kind::connector: std::cout << "connector " << mv.id << "\n"; break;
            case steiner::play_kind::connector_direct: std::cout << "connector direct\n"; break;
            case steiner::play_kind::ret: std::cout << "return " << mv.id << "\n"; break;
        }
    }
    std::cout << (tr.solvable ? "solvable" : "unsolvable") << "\n";
    return exit_ok;
}

int run_kappa(const std::string& path) {
    steiner::instance inst = load_instance(path);
    std::cout << "kappa " << steiner::kappa(inst) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner path cover and Steiner cycle solver for interval graphs"};
    app.require_subcommand(1);

    std::string file;
    std::string mode = "cover";
    int kappa_flag = -1;
    bool stats = false;
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    long long gen_range = 100;
    long long gen_max_len = 10;
    std::string gen_terminals = "1/2";

    CLI::App* sc_cover = app.add_subcommand("solve-cover", "Minimum Steiner path cover with witness");
    sc_cover->add_option("file", file)->required();
    CLI::App* sc_cycle = app.add_subcommand("solve-cycle", "Steiner cycle or infeasibility witness");
    sc_cycle->add_option("file", file)->required();
    CLI::App* sc_stream = app.add_subcommand("stream", "Single-pass run emitting placement events");
    sc_stream->add_option("file", file)->required();
    sc_stream->add_option("--mode", mode)->check(CLI::IsMember({"cover", "cycle"}));
    sc_stream->add_option("--kappa", kappa_flag, "Containment budget for early path finalization")
        ->check(CLI::NonNegativeNumber);
    sc_stream->add_flag("--stats", stats, "Append peak_buffer and reads");
    CLI::App* sc_oracle = app.add_subcommand("oracle", "Brute-force ground truth (small n)");
    sc_oracle->add_option("file", file)->required();
    CLI::App* sc_verify = app.add_subcommand("verify", "Check a witness read from standard input");
    sc_verify->add_option("file", file)->required();
    CLI::App* sc_gen = app.add_subcommand("gen", "Deterministic random instance to standard output");
    sc_gen->add_option("--n", gen_n)->required();
    sc_gen->add_option("--seed", gen_seed);
    sc_gen->add_option("--range", gen_range);
    sc_gen->add_option("--max-len", gen_max_len);
    sc_gen->add_option("--terminals", gen_terminals, "Terminal fraction, e.g. 1/2");
    CLI::App* sc_play = app.add_subcommand("play", "Player simulation with reverse greedy return");
    sc_play->add_option("file", file)->required();
    CLI::App* sc_kappa = app.add_subcommand("kappa", "Containment parameter");
    sc_kappa->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    if (sc_cover->parsed()) return run_solve_cover(file);
    if (sc_cycle->parsed()) return run_solve_cycle(file);
    if (sc_stream->parsed())
        return run_stream(file, mode,
                          kappa_flag >= 0 ? std::optional<int>(kappa_flag) : std::nullopt, stats);
    if (sc_oracle->parsed()) return run_oracle(file);
    if (sc_verify->parsed()) return run_verify(file);
    if (sc_gen->parsed()) return run_gen(gen_n, gen_seed, gen_range, gen_max_len, gen_terminals);
    if (sc_play->parsed()) return run_play(file);
    if (sc_kappa->parsed()) return run_kappa(file);
    return exit_input;
}
