// prymtool: command-line front end for the Prym datum library.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prym/abelian.hpp"
#include "prym/conditions.hpp"
#include "prym/error.hpp"
#include "prym/io.hpp"
#include "prym/search.hpp"

#ifndef PRYM_DATA_DIR
#define PRYM_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace prym;

namespace {

struct ScopeFlags {
    std::vector<int> r;
    bool abelian_only = false;
    int max_order = kMaxOrder;
    long max_gtilde = -1;
    int jobs = 1;
    std::uint64_t seed = 1;
    bool allow_symbolic = false;
    std::vector<std::string> group_files;
    std::string groups_dir = std::string(PRYM_DATA_DIR) + "/groups";
    std::string format = "csv";
    std::string out;
    bool use_cache = false;
};

void add_scope_flags(CLI::App* cmd, ScopeFlags& f) {
    cmd->add_option("--r", f.r, "Number of branch points (repeatable)")->required()->check(CLI::Range(4, 10));
    cmd->add_flag("--abelian-only", f.abelian_only, "Skip the Cayley-table groups");
    cmd->add_option("--max-order", f.max_order, "Largest group order")->check(CLI::Range(2, kMaxOrder));
    cmd->add_option("--max-gtilde", f.max_gtilde, "Largest genus of the top curve")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--seed", f.seed, "Seed of the sampled rank test");
    cmd->add_flag("--allow-symbolic", f.allow_symbolic, "Fall back to symbolic elimination");
    cmd->add_option("--group", f.group_files, "Cayley-table file (repeatable; replaces --groups-dir)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--groups-dir", f.groups_dir, "Directory of *.cayley files searched by default");
    cmd->add_flag("--use-cache", f.use_cache, "Reuse rows of an identical earlier search");
}

SearchConfig make_config(const ScopeFlags& f) {
    SearchConfig cfg;
    cfg.r_values = f.r;
    std::sort(cfg.r_values.begin(), cfg.r_values.end());
    cfg.r_values.erase(std::unique(cfg.r_values.begin(), cfg.r_values.end()), cfg.r_values.end());
    cfg.abelian_only = f.abelian_only;
    cfg.max_order = f.max_order;
    if (f.max_gtilde > 0) cfg.max_gtilde = f.max_gtilde;
    cfg.jobs = f.jobs;
    cfg.classify.seed = f.seed;
    cfg.classify.allow_symbolic = f.allow_symbolic;
    if (!f.abelian_only) {
        if (!f.group_files.empty()) {
            cfg.group_files = f.group_files;
        } else if (fs::is_directory(f.groups_dir)) {
            for (const auto& e : fs::directory_iterator(f.groups_dir))
                if (e.path().extension() == ".cayley") cfg.group_files.push_back(e.path().string());
            std::sort(cfg.group_files.begin(), cfg.group_files.end());
        } else {
            std::cerr << "warning: no group directory at " << f.groups_dir << "; searching abelian groups only\n";
        }
    }
    for (int r : cfg.r_values)
        if (r == 4 && !cfg.max_gtilde)
            std::cerr << "warning: r = 4 without --max-gtilde is bounded only by --max-order\n";
    return cfg;
}

// FNV-1a; only used to name cache files.
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_key(const SearchConfig& cfg) {
    std::ostringstream k;
    k << "rows-v1";
    for (int r : cfg.r_values) k << " r" << r;
    k << " ab" << cfg.abelian_only << " ord" << cfg.max_order << " gt" << cfg.max_gtilde.value_or(-1) << " seed"
      << cfg.classify.seed << " sym" << cfg.classify.allow_symbolic;
    for (const auto& f : cfg.group_files) k << '\n' << read_text_file(f);
    std::ostringstream name;
    name << "search-" << std::hex << fnv1a(k.str()) << ".csv";
    return name.str();
}

std::vector<ReportRow> search_rows(const SearchConfig& cfg, const std::vector<SearchGroup>& groups, bool use_cache) {
    if (!use_cache) return run_search(cfg, groups);
    const fs::path file = cache_directory() / cache_key(cfg);
    if (fs::exists(file)) return rows_from_csv(read_text_file(file));
    auto rows = run_search(cfg, groups);
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    std::ofstream out(file, std::ios::binary);
    if (out) out << rows_to_csv(rows);
    return rows;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string format_rows(const std::vector<ReportRow>& rows, const std::string& format) {
    return format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int cmd_check(const std::string& datum_file, bool allow_symbolic, std::uint64_t seed) {
    const PrymDatum d = read_datum_file(datum_file);
    const RepDecomposition V = hodge_decomposition(d);
    ClassifyOptions opt;
    opt.allow_symbolic = allow_symbolic;
    opt.seed = seed;
    const ConditionReport rep = classify_B(d, V, opt);

    std::cout << "g̃=" << d.g_tilde << " g=" << d.g << " b=" << d.b << " p=" << d.p << " dimS2=" << rep.dim_s2
              << " A=" << (rep.cond_A ? "yes" : "no") << " B1=" << (rep.cond_B1 ? "yes" : "no")
              << " B=" << to_string(rep.status);
    if (rep.status == BStatus::refuted_generic) {
        std::cout << " kernel=[";
        for (std::size_t i = 0; i < rep.kernel.size(); ++i) std::cout << (i ? ", " : "") << rep.kernel[i];
        std::cout << "]";
    }
    std::cout << "\n";
    if (rep.sampled_rank) {
        std::cout << "sampled rank " << *rep.sampled_rank << " of " << rep.dim_s2 << " at t=(";
        for (std::size_t i = 0; i < rep.sample_point.size(); ++i) std::cout << (i ? "," : "") << rep.sample_point[i];
        std::cout << ")\n";
    }
    if (rep.symbolic_rank) std::cout << "symbolic rank " << *rep.symbolic_rank << "\n";

    if (d.group.abelian()) {
        const CoverMatrix C = cover_matrix(d);
        std::cout << "n\td_n\tsigma\n";
        for (const auto& ch : eigen_dims(C))
            std::cout << "(" << join_ints(ch.n) << ")\t" << ch.dim << "\t" << (ch.odd ? "-" : "+") << "\n";
    } else {
        const auto& T = *V.table;
        std::cout << "chi\tdeg\tmult\tsigma\n";
        for (int chi = 0; chi < T.size(); ++chi)
            std::cout << chi << "\t" << T.degrees[chi] << "\t" << V.mult[chi] << "\t"
                      << (V.sigma_sign[chi] < 0 ? "-" : "+") << "\n";
    }
    return 0;
}

json dump_datum(const std::string& datum_file, const std::string& what) {
    const PrymDatum d = read_datum_file(datum_file);
    json out;
    if (what == "characters") {
        const RepDecomposition V = hodge_decomposition(d);
        const auto& T = *V.table;
        out = json::array();
        for (int chi = 0; chi < T.size(); ++chi) {
            json c{{"index", chi},
                   {"degree", T.degrees[chi]},
                   {"dual", T.dual(chi)},
                   {"frobenius_schur", frobenius_schur(T, chi)},
                   {"multiplicity", V.mult[chi]},
                   {"sigma_sign", V.sigma_sign[chi]}};
            if (!T.labels.empty()) c["label"] = T.labels[chi];
            out.push_back(std::move(c));
        }
        return out;
    }
    if (!d.group.abelian()) throw InputError("--what " + what + " needs an abelian datum");
    const CoverMatrix C = cover_matrix(d);
    if (what == "eigendims") {
        out = json::array();
        for (const auto& ch : eigen_dims(C)) out.push_back({{"n", ch.n}, {"dim", ch.dim}, {"odd", ch.odd}});
    } else if (what == "basis") {
        out = json::array();
        for (const auto& f : anti_invariant_basis(C))
            out.push_back({{"n", f.n}, {"nu", f.nu}, {"floor_exps", f.floor_exps}});
    } else if (what == "products") {
        const ProductSystem P = build_product_system(C);
        out = json::array();
        for (int q = 0; q < static_cast<int>(P.pairs.size()); ++q) {
            std::vector<long> cleared;
            for (int j = 0; j < P.r; ++j) cleared.push_back(P.cleared_exp(q, j));
            const auto& pr = P.pairs[q];
            out.push_back({{"label", P.label(q)},
                           {"i", pr.i},
                           {"j", pr.j},
                           {"x_power", pr.k},
                           {"exponents", pr.E},
                           {"cleared_exponents", cleared}});
        }
    } else {
        throw InputError("unknown --what " + what);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prym data of abelian and Cayley-table covers: conditions, searches, table checks"};
    app.require_subcommand(1, 1);

    std::string datum_file;
    bool allow_symbolic = false;
    std::uint64_t seed = 1;
    auto* check = app.add_subcommand("check", "Genera, condition A/B1/B verdicts for one datum");
    check->add_option("--datum", datum_file, "Datum JSON file")->required()->check(CLI::ExistingFile);
    check->add_flag("--allow-symbolic", allow_symbolic, "Decide a deficient sampled rank symbolically");
    check->add_option("--seed", seed, "Seed of the sampled rank test");

    ScopeFlags search_flags;
    auto* search = app.add_subcommand("search", "Enumerate Prym data and classify them");
    add_scope_flags(search, search_flags);
    search->add_option("--format", search_flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    search->add_option("--out", search_flags.out, "Output file (default stdout)");

    ScopeFlags table_flags;
    std::string reference_file;
    auto* table = app.add_subcommand("table", "Search and compare with the reference table");
    add_scope_flags(table, table_flags);
    table->add_option("--format", table_flags.format, "Format of the rows written to --out")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_flags.out, "Write the search rows to this file");
    table->add_option("--reference", reference_file, "Reference table CSV (default: built in)")
        ->check(CLI::ExistingFile);

    std::string dump_file, what;
    auto* dump = app.add_subcommand("dump", "Intermediate data of one datum as JSON");
    dump->add_option("--datum", dump_file, "Datum JSON file")->required()->check(CLI::ExistingFile);
    dump->add_option("--what", what, "What to dump")
        ->required()
        ->check(CLI::IsMember({"eigendims", "basis", "products", "characters"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(datum_file, allow_symbolic, seed);

        if (*search) {
            const SearchConfig cfg = make_config(search_flags);
            const auto rows = search_rows(cfg, collect_groups(cfg), search_flags.use_cache);
            emit(format_rows(rows, search_flags.format), search_flags.out);
            return 0;
        }

        if (*table) {
            const SearchConfig cfg = make_config(table_flags);
            const auto reference = parse_reference_csv(reference_file.empty() ? embedded_reference_csv()
                                                                              : read_text_file(reference_file));
            const auto groups = collect_groups(cfg);
            const auto rows = search_rows(cfg, groups, table_flags.use_cache);
            std::vector<SmallGroupId> ids;
            for (const auto& g : groups)
                if (g.id) ids.push_back(*g.id);
            const TableDiff diff = diff_table(rows, reference, cfg, ids);
            if (!table_flags.out.empty()) emit(format_rows(rows, table_flags.format), table_flags.out);
            std::cout << diff.summary() << "\n";
            for (const auto& [k, n] : diff.missing) std::cout << "missing " << k.str() << " x" << n << "\n";
            for (const auto& [k, n] : diff.extra) std::cout << "extra " << k.str() << " x" << n << "\n";
            for (const auto& [ref, ours] : diff.flag_mismatch)
                std::cout << "flag mismatch: reference " << ref.str() << " vs found " << ours.str() << "\n";
            return 0;
        }

        if (*dump) {
            std::cout << dump_datum(dump_file, what).dump(2) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
