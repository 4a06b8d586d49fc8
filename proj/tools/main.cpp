// stacktrick command line: solve, simulate, count, atlas, verify, table.
// Result payloads go to stdout, diagnostics to stderr; exit status is 0
// exactly when no validation error, overflow, or cross-check mismatch
// occurred.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacktrick/atlas.hpp"
#include "stacktrick/simulator.hpp"
#include "stacktrick/solver.hpp"
#include "stacktrick/sweep.hpp"
#include "stacktrick/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace stacktrick;

constexpr const char* kArtifactVersion = "1.0.0";

json envelope(const char* command, json inputs, json result) {
    json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["result"] = std::move(result);
    env["artifact_version"] = kArtifactVersion;
    return env;
}

void emit(const json& env) { std::cout << env.dump(2) << '\n'; }

// Rationals are emitted as numerator/denominator pairs; decimal strings
// because the exact values are 128-bit wide.
json rational_json(const exact::Rational& r) {
    json j;
    j["num"] = exact::to_string(r.num());
    j["den"] = exact::to_string(r.den());
    return j;
}

json optional_json(const std::optional<std::int64_t>& v) {
    return v ? json(*v) : json(nullptr);
}

json params_json(const DerivedParams& params) {
    json j;
    j["cards_per_stack"] = params.cards_per_stack;
    j["offset"] = params.offset ? rational_json(*params.offset) : json(nullptr);
    j["offset_floor"] = optional_json(params.offset_floor);
    j["offset_frac"] = params.offset_frac ? rational_json(*params.offset_frac) : json(nullptr);
    j["threshold"] = params.threshold ? rational_json(*params.threshold) : json(nullptr);
    return j;
}

std::string spec_str(const TrickSpec& spec) {
    return "(" + std::to_string(spec.cards) + ", " + std::to_string(spec.stacks) +
           ", " + std::to_string(spec.on_top) + ")";
}

int cmd_solve(std::int64_t cards, std::int64_t stacks, std::int64_t on_top,
              std::optional<std::int64_t> at_k, const std::string& format) {
    const TrickSpec spec = validate_spec(cards, stacks, on_top);
    const SolveOutcome outcome = solve(spec);
    std::optional<Certification> cert;
    if (at_k) cert = certify_at(spec, *at_k);

    if (format == "machine") {
        json inputs;
        inputs["cards"] = cards;
        inputs["stacks"] = stacks;
        inputs["on_top"] = on_top;
        if (at_k) inputs["k"] = *at_k;
        json result;
        result["verdict"] = to_string(outcome.verdict);
        result["reason"] = to_string(outcome.reason);
        result["final_position"] = optional_json(outcome.final_position);
        result["k_paper"] = optional_json(outcome.k_paper);
        result["k_star"] = optional_json(outcome.k_star);
        result["params"] = params_json(outcome.params);
        if (cert) {
            json c;
            c["k"] = cert->iterations;
            c["certified"] = cert->certified;
            c["image"] = json::array();
            for (const std::int64_t v : cert->image) c["image"].push_back(v);
            result["certification"] = std::move(c);
        }
        emit(envelope("solve", std::move(inputs), std::move(result)));
        return 0;
    }

    std::cout << "trick " << spec_str(spec) << ": " << to_string(outcome.verdict)
              << " [" << to_string(outcome.reason) << "]\n";
    std::cout << "cards per stack: " << outcome.params.cards_per_stack << '\n';
    if (outcome.params.offset) {
        std::cout << "offset: " << outcome.params.offset->str() << " (floor "
                  << *outcome.params.offset_floor << ", frac "
                  << outcome.params.offset_frac->str() << ")\n";
    }
    if (outcome.params.threshold)
        std::cout << "threshold: " << outcome.params.threshold->str() << '\n';
    if (outcome.solvable()) {
        std::cout << "final position: " << *outcome.final_position << '\n';
        std::cout << "iteration bound (k_paper): " << *outcome.k_paper << '\n';
        std::cout << "empirical minimum (k_star): " << *outcome.k_star << '\n';
    }
    if (cert) {
        std::cout << "certified at k=" << cert->iterations << ": "
                  << (cert->certified ? "yes" : "no") << " (" << cert->image.size()
                  << " distinct final position" << (cert->image.size() == 1 ? "" : "s");
        if (cert->image.size() <= 16) {
            std::cout << ":";
            for (const std::int64_t v : cert->image) std::cout << ' ' << v;
        }
        std::cout << ")\n";
    }
    return 0;
}

int cmd_simulate(std::int64_t cards, std::int64_t stacks, std::int64_t on_top,
                 std::int64_t start, std::int64_t iterations, bool trace,
                 const std::string& format) {
    const TrickSpec spec = validate_spec(cards, stacks, on_top);
    if (start < 1 || start > spec.cards)
        throw std::invalid_argument("start position out of range");
    const TrickTrace run = run_trick(spec, start, iterations);

    if (format == "machine") {
        json inputs;
        inputs["cards"] = cards;
        inputs["stacks"] = stacks;
        inputs["on_top"] = on_top;
        inputs["start"] = start;
        inputs["iterations"] = iterations;
        json result;
        result["final_position"] = run.final_position();
        if (trace) {
            json steps = json::array();
            for (std::size_t i = 0; i < run.iterations.size(); ++i) {
                const IterationRecord& rec = run.iterations[i];
                json step;
                step["iteration"] = static_cast<std::int64_t>(i) + 1;
                step["chosen_stack"] = rec.chosen_stack;
                step["stack_row"] = rec.stack_row;
                step["deck"] = rec.deck.cards;
                steps.push_back(std::move(step));
            }
            result["trace"] = std::move(steps);
        }
        emit(envelope("simulate", std::move(inputs), std::move(result)));
        return 0;
    }

    if (trace) {
        std::cout << "start: " << start << '\n';
        for (std::size_t i = 0; i < run.iterations.size(); ++i) {
            const IterationRecord& rec = run.iterations[i];
            std::cout << "iteration " << i + 1 << ": stack " << rec.chosen_stack
                      << ", row " << rec.stack_row << '\n';
            std::cout << "  " << format_deck_line(rec.deck) << '\n';
        }
    }
    std::cout << "final position: " << run.final_position() << '\n';
    return 0;
}

int cmd_count(std::int64_t cards, const std::string& format) {
    const CountResult count = count_solvable(cards);
    const bool match = count.formula_count == count.enumerated_count;
    if (format == "machine") {
        json inputs;
        inputs["cards"] = cards;
        json result;
        result["formula"] = count.formula_count;
        result["enumerated"] = count.enumerated_count;
        result["match"] = match;
        emit(envelope("count", std::move(inputs), std::move(result)));
    } else {
        std::cout << "deck size: " << cards << '\n';
        std::cout << "solvable tricks (formula): " << count.formula_count << '\n';
        std::cout << "solvable tricks (enumerated): " << count.enumerated_count << '\n';
    }
    if (!match) {
        std::cerr << "count mismatch for C=" << cards << ": formula "
                  << count.formula_count << " vs enumerated " << count.enumerated_count
                  << '\n';
        return 1;
    }
    return 0;
}

int cmd_atlas(std::int64_t max_cards, const std::string& out_path) {
    const std::vector<AtlasRow> rows = atlas_range(max_cards);
    if (out_path.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        write_csv(out, rows);
    }
    return 0;
}

int cmd_verify(std::int64_t max_cards, const std::string& format) {
    const VerifyReport report = run_verification(max_cards);
    if (format == "machine") {
        json inputs;
        inputs["max_cards"] = max_cards;
        json result;
        result["specs"] = report.specs_total;
        result["solvable"] = report.solvable_total;
        result["equivalence_checks"] = report.equivalence_checks;
        result["equivalence_failures"] = report.equivalence_failures;
        result["verdict_checks"] = report.verdict_checks;
        result["verdict_failures"] = report.verdict_failures;
        result["stability_checks"] = report.stability_checks;
        result["stability_failures"] = report.stability_failures;
        result["count_checks"] = report.count_checks;
        result["count_failures"] = report.count_failures;
        result["failures"] = report.failures();
        result["ok"] = report.ok();
        emit(envelope("verify", std::move(inputs), std::move(result)));
    } else {
        std::cout << "decks 1.." << max_cards << ": " << report.specs_total
                  << " tricks (" << report.solvable_total << " solvable)\n";
        std::cout << "route equivalence: " << report.equivalence_checks << " checks, "
                  << report.equivalence_failures << " failures\n";
        std::cout << "verdict vs. measurement: " << report.verdict_checks << " checks, "
                  << report.verdict_failures << " failures\n";
        std::cout << "stability past the bound: " << report.stability_checks
                  << " checks, " << report.stability_failures << " failures\n";
        std::cout << "counting formula: " << report.count_checks << " checks, "
                  << report.count_failures << " failures\n";
        std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
    }
    for (const std::string& diag : report.diagnostics) std::cerr << diag << '\n';
    return report.ok() ? 0 : 1;
}

struct TableEntry {
    std::int64_t cards, stacks, on_top, k, final_position;
};

// The 15 built-in reference tricks; any drift in the solver breaks this.
constexpr TableEntry kReferenceTable[] = {
    {20, 4, 2, 3, 14}, {21, 7, 5, 2, 18}, {24, 6, 4, 3, 20}, {25, 5, 3, 3, 19},
    {27, 3, 1, 4, 14}, {28, 4, 2, 3, 19}, {30, 5, 3, 3, 23}, {32, 4, 2, 3, 22},
    {33, 3, 1, 4, 17}, {35, 5, 3, 3, 27}, {36, 6, 4, 3, 29}, {36, 9, 3, 2, 14},
    {39, 3, 1, 4, 20}, {40, 4, 2, 3, 27}, {40, 8, 5, 2, 29},
};

int cmd_table(const std::string& format) {
    bool all_match = true;
    json rows = json::array();
    std::string text;
    for (const TableEntry& entry : kReferenceTable) {
        const TrickSpec spec = validate_spec(entry.cards, entry.stacks, entry.on_top);
        const SolveOutcome outcome = solve(spec);
        const bool match = outcome.solvable() &&
                           *outcome.final_position == entry.final_position &&
                           *outcome.k_paper == entry.k;
        all_match = all_match && match;
        if (format == "machine") {
            json row;
            row["cards"] = entry.cards;
            row["stacks"] = entry.stacks;
            row["on_top"] = entry.on_top;
            row["k"] = entry.k;
            row["final_position"] = entry.final_position;
            row["computed_final_position"] = optional_json(outcome.final_position);
            row["computed_k_paper"] = optional_json(outcome.k_paper);
            row["match"] = match;
            rows.push_back(std::move(row));
        } else {
            text += "(" + std::to_string(entry.cards) + ", " + std::to_string(entry.stacks) +
                    ", " + std::to_string(entry.on_top) + ", " + std::to_string(entry.k) +
                    ") = " + std::to_string(entry.final_position) +
                    (match ? "   ok" : "   MISMATCH") + "\n";
        }
        if (!match)
            std::cerr << "table mismatch at " << spec_str(spec) << '\n';
    }
    if (format == "machine") {
        json result;
        result["rows"] = std::move(rows);
        result["all_match"] = all_match;
        emit(envelope("table", json::object(), std::move(result)));
    } else {
        std::cout << text;
        std::cout << (all_match ? "all 15 rows match\n" : "MISMATCHES FOUND\n");
    }
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deal-into-stacks card trick solver, simulator and atlas"};
    app.set_version_flag("--version", kArtifactVersion);
    app.require_subcommand(1);

    std::int64_t cards = 0, stacks = 0, on_top = 0, start = 0, iterations = 0;
    std::int64_t at_k = 0, max_cards = 60;
    bool trace = false;
    std::string format = "text";
    std::string out_path;

    auto* solve_cmd = app.add_subcommand("solve", "Decide solvability and compute the final position");
    solve_cmd->add_option("--cards", cards, "Deck size (C)")->required();
    solve_cmd->add_option("--stacks", stacks, "Number of stacks (n)")->required();
    solve_cmd->add_option("--on-top", on_top, "Stacks placed above the chosen one (j)")->required();
    auto* k_opt = solve_cmd->add_option("--k", at_k, "Also certify the trick at exactly this iteration count");
    solve_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* sim_cmd = app.add_subcommand("simulate", "Run the physical deck simulation");
    sim_cmd->add_option("--cards", cards, "Deck size (C)")->required();
    sim_cmd->add_option("--stacks", stacks, "Number of stacks (n)")->required();
    sim_cmd->add_option("--on-top", on_top, "Stacks placed above the chosen one (j)")->required();
    sim_cmd->add_option("--start", start, "Start position of the tracked card (1-based)")->required();
    sim_cmd->add_option("--iterations", iterations, "Number of deal-and-gather rounds")->required();
    sim_cmd->add_flag("--trace", trace, "Print each iteration's deck, chosen stack and row");
    sim_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* count_cmd = app.add_subcommand("count", "Count solvable tricks for a deck size");
    count_cmd->add_option("--cards", cards, "Deck size (C)")->required();
    count_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* atlas_cmd = app.add_subcommand("atlas", "Enumerate all tricks up to a deck size as CSV");
    atlas_cmd->add_option("--max-cards", max_cards, "Largest deck size")->capture_default_str();
    atlas_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
    atlas_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv"}));

    std::int64_t verify_max = 60;
    if (const char* env = std::getenv("STACKTRICK_VERIFY_MAX"))
        verify_max = std::strtoll(env, nullptr, 10);
    auto* verify_cmd = app.add_subcommand(
        "verify", "Cross-check every formula against the deck simulator");
    verify_cmd
        ->add_option("--max-cards", verify_max,
                     "Largest deck size (env STACKTRICK_VERIFY_MAX overrides the default)")
        ->capture_default_str();
    verify_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* table_cmd = app.add_subcommand("table", "Recompute the 15 built-in reference tricks");
    table_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return cmd_solve(cards, stacks, on_top,
                             k_opt->count() ? std::optional<std::int64_t>(at_k) : std::nullopt,
                             format);
        if (sim_cmd->parsed())
            return cmd_simulate(cards, stacks, on_top, start, iterations, trace, format);
        if (count_cmd->parsed()) return cmd_count(cards, format);
        if (atlas_cmd->parsed()) return cmd_atlas(max_cards, out_path);
        if (verify_cmd->parsed()) return cmd_verify(verify_max, format);
        if (table_cmd->parsed()) return cmd_table(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
