#include "prym/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "prym/error.hpp"

namespace prym {

using nlohmann::json;

namespace {

std::vector<int> int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw InputError(what + ", entry " + std::to_string(i + 1) + ": expected an integer");
        out.push_back(j[i].get<int>());
    }
    return out;
}

Elem abelian_element(const FiniteGroup& G, const json& j, const std::string& what) {
    std::vector<int> v = j.is_number_integer() ? std::vector<int>{j.get<int>()} : int_vector(j, what);
    const AbelianData* ab = G.abelian();
    if (static_cast<int>(v.size()) != ab->rank)
        throw InputError(what + ": expected " + std::to_string(ab->rank) + " coordinates");
    for (int& x : v) x = ((x % ab->N) + ab->N) % ab->N;
    Elem e = G.find_coords(v);
    if (e < 0) throw InputError(what + ": not an element of the group");
    return e;
}

Elem cayley_element(const FiniteGroup& G, const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + ": expected an element index");
    int e = j.get<int>();
    if (e < 0 || e >= G.order()) throw InputError(what + ": index out of range");
    return e;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PrymDatum parse_datum_json(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("datum JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group")) throw InputError("datum JSON: missing \"group\"");
    const json& g = j["group"];

    FiniteGroup G;
    std::vector<Elem> tuple;
    Elem sigma = -1;
    if (g.contains("abelian")) {
        const json& a = g["abelian"];
        if (!a.contains("N") || !a["N"].is_number_integer()) throw InputError("group.abelian: missing integer \"N\"");
        if (!a.contains("matrix") || !a["matrix"].is_array()) throw InputError("group.abelian: missing \"matrix\"");
        const int N = a["N"].get<int>();
        std::vector<std::vector<int>> A;
        for (std::size_t i = 0; i < a["matrix"].size(); ++i)
            A.push_back(int_vector(a["matrix"][i], "group.abelian.matrix row " + std::to_string(i + 1)));
        if (N < 2) throw InputError("group.abelian.N: must be at least 2");
        if (A.empty() || A[0].empty()) throw InputError("group.abelian.matrix: empty");
        for (std::size_t i = 1; i < A.size(); ++i)
            if (A[i].size() != A[0].size()) throw InputError("group.abelian.matrix: rows of different lengths");
        for (auto& row : A)
            for (int& x : row) x = ((x % N) + N) % N;
        G = abelian_from_columns(N, A);
        if (j.contains("tuple")) {
            if (!j["tuple"].is_array()) throw InputError("tuple: expected an array");
            for (std::size_t i = 0; i < j["tuple"].size(); ++i)
                tuple.push_back(abelian_element(G, j["tuple"][i], "tuple entry " + std::to_string(i + 1)));
        } else {
            for (std::size_t c = 0; c < A[0].size(); ++c) {
                std::vector<int> col;
                for (const auto& row : A) col.push_back(row[c]);
                tuple.push_back(G.find_coords(col));
            }
        }
        if (!j.contains("sigma")) throw InputError("datum JSON: missing \"sigma\"");
        sigma = abelian_element(G, j["sigma"], "sigma");
    } else if (g.contains("cayley_file")) {
        if (!g["cayley_file"].is_string()) throw InputError("group.cayley_file: expected a path");
        std::filesystem::path p = g["cayley_file"].get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        G = read_cayley_file(p.string());
        if (!j.contains("tuple") || !j["tuple"].is_array()) throw InputError("datum JSON: missing \"tuple\"");
        for (std::size_t i = 0; i < j["tuple"].size(); ++i)
            tuple.push_back(cayley_element(G, j["tuple"][i], "tuple entry " + std::to_string(i + 1)));
        if (!j.contains("sigma")) throw InputError("datum JSON: missing \"sigma\"");
        sigma = cayley_element(G, j["sigma"], "sigma");
    } else {
        throw InputError("group: expected \"abelian\" or \"cayley_file\"");
    }
    return validate_datum(G, std::move(tuple), sigma);
}

PrymDatum read_datum_file(const std::filesystem::path& path) {
    return parse_datum_json(read_text_file(path), path.parent_path());
}

const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> cols{"r",       "g_tilde",  "g",        "b",           "p",
                                               "index",   "group_name", "group_id", "quotient_id", "dim_s2",
                                               "B1",      "b_ge_6",   "B_status", "canonical_tuple", "sigma",
                                               "note"};
    return cols;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_record(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw InputError("unterminated quoted CSV field");
    out.push_back(std::move(cur));
    return out;
}

namespace {

std::vector<std::string> row_fields(const ReportRow& r) {
    return {std::to_string(r.r),     std::to_string(r.g_tilde), std::to_string(r.g),      std::to_string(r.b),
            std::to_string(r.p),     std::to_string(r.index),   r.group_name,             r.group_id,
            r.quotient_id,           std::to_string(r.dim_s2),  r.B1 ? "1" : "0",         r.b_ge_6 ? "1" : "0",
            to_string(r.B_status),   r.canonical_tuple,         r.sigma,                  r.note};
}

long to_long(const std::string& s, int line, const std::string& col) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("line " + std::to_string(line) + ", column " + col + ": expected an integer");
    }
}

bool to_flag(const std::string& s, int line, const std::string& col) {
    if (s == "1") return true;
    if (s == "0") return false;
    throw InputError("line " + std::to_string(line) + ", column " + col + ": expected 0 or 1");
}

ReportRow row_from_fields(const std::vector<std::string>& f, int line) {
    const auto& cols = report_columns();
    if (f.size() != cols.size())
        throw InputError("line " + std::to_string(line) + ": expected " + std::to_string(cols.size()) + " fields");
    ReportRow r;
    r.r = static_cast<int>(to_long(f[0], line, cols[0]));
    r.g_tilde = to_long(f[1], line, cols[1]);
    r.g = to_long(f[2], line, cols[2]);
    r.b = to_long(f[3], line, cols[3]);
    r.p = to_long(f[4], line, cols[4]);
    r.index = static_cast<int>(to_long(f[5], line, cols[5]));
    r.group_name = f[6];
    r.group_id = f[7];
    r.quotient_id = f[8];
    r.dim_s2 = to_long(f[9], line, cols[9]);
    r.B1 = to_flag(f[10], line, cols[10]);
    r.b_ge_6 = to_flag(f[11], line, cols[11]);
    auto st = parse_bstatus(f[12]);
    if (!st) throw InputError("line " + std::to_string(line) + ": unknown B_status " + f[12]);
    r.B_status = *st;
    r.canonical_tuple = f[13];
    r.sigma = f[14];
    r.note = f[15];
    return r;
}

}  // namespace

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
    std::string out;
    const auto& cols = report_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += '\n';
    for (const auto& r : rows) {
        auto f = row_fields(r);
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
        out += '\n';
    }
    return out;
}

std::vector<ReportRow> rows_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ReportRow> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (split_csv_record(line) != report_columns()) throw InputError("line 1: unexpected CSV header");
            continue;
        }
        if (line.empty()) continue;
        rows.push_back(row_from_fields(split_csv_record(line), lineno));
    }
    return rows;
}

std::string rows_to_json(const std::vector<ReportRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"r", r.r},
                       {"g_tilde", r.g_tilde},
                       {"g", r.g},
                       {"b", r.b},
                       {"p", r.p},
                       {"index", r.index},
                       {"group_name", r.group_name},
                       {"group_id", r.group_id},
                       {"quotient_id", r.quotient_id},
                       {"dim_s2", r.dim_s2},
                       {"B1", r.B1},
                       {"b_ge_6", r.b_ge_6},
                       {"B_status", to_string(r.B_status)},
                       {"canonical_tuple", r.canonical_tuple},
                       {"sigma", r.sigma},
                       {"note", r.note}});
    }
    return arr.dump(2) + "\n";
}

std::vector<ReportRow> rows_from_json(const std::string& text) {
    std::vector<ReportRow> rows;
    try {
        for (const auto& o : json::parse(text)) {
            ReportRow r;
            r.r = o.at("r").get<int>();
            r.g_tilde = o.at("g_tilde").get<long>();
            r.g = o.at("g").get<long>();
            r.b = o.at("b").get<long>();
            r.p = o.at("p").get<long>();
            r.index = o.at("index").get<int>();
            r.group_name = o.at("group_name").get<std::string>();
            r.group_id = o.at("group_id").get<std::string>();
            r.quotient_id = o.at("quotient_id").get<std::string>();
            r.dim_s2 = o.at("dim_s2").get<long>();
            r.B1 = o.at("B1").get<bool>();
            r.b_ge_6 = o.at("b_ge_6").get<bool>();
            auto st = parse_bstatus(o.at("B_status").get<std::string>());
            if (!st) throw InputError("unknown B_status in JSON report");
            r.B_status = *st;
            r.canonical_tuple = o.at("canonical_tuple").get<std::string>();
            r.sigma = o.at("sigma").get<std::string>();
            r.note = o.at("note").get<std::string>();
            rows.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("report JSON: ") + e.what());
    }
    return rows;
}

std::filesystem::path cache_directory() {
    if (const char* d = std::getenv("PRYM_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "prymtool";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "prymtool";
    return std::filesystem::temp_directory_path() / "prymtool";
}

}  // namespace prym
