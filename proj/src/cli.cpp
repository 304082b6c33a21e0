#include "schwinger/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schwinger/dense.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/kernels.hpp"
#include "schwinger/numtheory.hpp"
#include "schwinger/representations.hpp"
#include "schwinger/verify.hpp"

namespace schwinger {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

// Raised for bad flag values that CLI11 cannot validate on its own.
struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::uint64_t M = 0;
    std::string format = "table";
    std::string split;
    std::string type;
    std::string bra;
    std::string ket;
    std::vector<std::string> only;
    bool zero_based = false;
    std::optional<std::uint64_t> max_dense;
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Table;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw UsageError(what + ": not a non-negative integer: '" + text + "'");
    return v;
}

std::string phase_str(std::uint64_t e, std::uint64_t M) { return std::to_string(e) + "/" + std::to_string(M); }

// Residue r of a slot with modulus m, shifted to the 1-based range if asked.
std::uint64_t shown(std::uint64_t r, std::uint64_t m, int base) { return base == 1 && r == 0 ? m : r; }

std::string label_str(const Label& l, const std::vector<std::uint64_t>& scheme, int base) {
    std::string s;
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(shown(l[j], scheme[j], base));
    }
    return s;
}

json label_json(const Label& l, const std::vector<std::uint64_t>& scheme, int base) {
    json a = json::array();
    for (std::size_t j = 0; j < l.size(); ++j) a.push_back(shown(l[j], scheme[j], base));
    return a;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void write_table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += "  ";
            s += r[i];
            if (i + 1 < r.size()) s.append(width[i] - r[i].size(), ' ');
        }
        os << s << '\n';
    };
    line(header);
    std::string rule;
    for (std::size_t i = 0; i < width.size(); ++i) rule += (i ? "  " : "") + std::string(width[i], '-');
    os << rule << '\n';
    for (const auto& r : rows) line(r);
}

void emit_rows(std::ostream& os, Format fmt, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    if (fmt == Format::Csv) write_csv(os, header, rows);
    else write_table(os, header, rows);
}

std::optional<BiFactorization> parse_split(const std::string& text, std::uint64_t M) {
    if (text.empty()) return std::nullopt;
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--split expects a,b");
    const auto a = parse_u64(text.substr(0, comma), "--split");
    const auto b = parse_u64(text.substr(comma + 1), "--split");
    if (a == 0 || b == 0 || a > M || b > M || a * b != M) {
        throw UsageError("--split " + text + ": factors must multiply to M = " + std::to_string(M));
    }
    if (gcd(a, b) != 1) {
        throw NotCoprime("--split " + text + " rejected: the two factors must be relatively prime (gcd " +
                         std::to_string(gcd(a, b)) + "); kq, q1q2 and k1k2 bases exist only for coprime splits");
    }
    return BiFactorization(a, b);
}

LabeledBasis basis_from_flags(const std::string& type, std::uint64_t M, const std::optional<BiFactorization>& split) {
    const auto kind = parse_basis_kind(type);
    if (!kind) throw UsageError("unknown basis type '" + type + "'");
    if (needs_split(*kind) && !split) throw UsageError("basis type " + type + " needs --split a,b");
    return build_basis(*kind, M, split);
}

void require_materializable(std::uint64_t M) {
    if (M > kMaxMaterializedDimension) {
        throw UsageError("M = " + std::to_string(M) + " exceeds the table limit " +
                         std::to_string(kMaxMaterializedDimension));
    }
}

// --- commands ------------------------------------------------------------

void cmd_factor(const Options& o, std::ostream& os) {
    const auto f = factorize(o.M);
    const auto fmt = parse_format(o.format);
    if (fmt == Format::Json) {
        json j;
        j["M"] = o.M;
        auto& rows = j["constituents"] = json::array();
        for (const auto& c : f.constituents()) {
            rows.push_back({{"p", c.prime}, {"n", c.exponent}, {"m", c.power}, {"L", c.cofactor}, {"N", c.inverse}});
        }
        if (f.size() == 0) j["note"] = "M = 1 has no prime constituents";
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& c = f[i];
        rows.push_back({std::to_string(i + 1), std::to_string(c.prime), std::to_string(c.exponent),
                        std::to_string(c.power), std::to_string(c.cofactor), std::to_string(c.inverse)});
    }
    if (fmt == Format::Table) os << "M = " << o.M << '\n';
    emit_rows(os, fmt, {"j", "p", "n", "m", "L", "N"}, rows);
    if (fmt == Format::Table && f.size() == 0) os << "note: M = 1 has no prime constituents\n";
}

std::string signs_str(const UnitRoot& r, const Factorization& f) {
    std::string s;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto m = f[j].power;
        const auto v = r.sign_pattern[j];
        if (v == 1 % m) s += '+';
        else if (v == m - 1) s += '-';
        else s += '*';
    }
    return s;
}

void cmd_roots(const Options& o, std::ostream& os) {
    const std::uint64_t M = o.M;
    const auto f = factorize(M);
    const auto roots = unit_square_roots(f);
    const auto fmt = parse_format(o.format);

    struct Row {
        const UnitRoot* root;
        std::optional<BiFactorization> split;
    };
    std::vector<Row> rows;
    std::size_t exotic = 0;
    for (const auto& r : roots) {
        Row row{&r, std::nullopt};
        if (r.is_sign_root(f)) row.split = root_to_bifactorization(r, f);
        else ++exotic;
        rows.push_back(row);
    }
    const auto splits = enumerate_bifactorizations(f);

    std::string note;
    if (exotic) note = "8 divides M: roots marked * are not +-1 on every prime power and have no split";
    else if (M % 4 == 2) note = "M = 2 mod 4: a and M - a give different splits";

    if (fmt == Format::Json) {
        json j;
        j["M"] = M;
        j["moduli"] = f.moduli();
        auto& arr = j["roots"] = json::array();
        for (const auto& row : rows) {
            json e;
            e["a"] = row.root->value;
            e["residues"] = row.root->sign_pattern;
            e["signs"] = signs_str(*row.root, f);
            e["sign_root"] = row.split.has_value();
            e["split"] = row.split ? json::array({row.split->m1(), row.split->m2()}) : json(nullptr);
            arr.push_back(e);
        }
        auto& sp = j["splits"] = json::array();
        for (const auto& bi : splits) sp.push_back(json::array({bi.m1(), bi.m2()}));
        j["count"] = roots.size();
        j["non_sign_roots"] = exotic;
        if (!note.empty()) j["note"] = note;
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> table;
    for (const auto& row : rows) {
        table.push_back({std::to_string(row.root->value), signs_str(*row.root, f),
                         row.split ? std::to_string(row.split->m1()) + "*" + std::to_string(row.split->m2()) : "-"});
    }
    if (fmt == Format::Table) {
        os << "M = " << M << ", " << roots.size() << " roots of x^2 = 1, " << splits.size() << " coprime splits\n";
    }
    emit_rows(os, fmt, {"a", "signs", "split"}, table);
    if (fmt == Format::Table && !note.empty()) os << "note: " << note << '\n';
}

void cmd_basis(const Options& o, std::ostream& os) {
    require_materializable(o.M);
    const auto split = parse_split(o.split, o.M);
    const auto basis = basis_from_flags(o.type, o.M, split);
    const auto table = materialize(basis);
    const int base = o.zero_based ? 0 : 1;
    const auto fmt = parse_format(o.format);
    if (fmt == Format::Json) {
        os << basis_to_json(table, base) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.states.size(); ++i) {
        const auto label = label_str(table.labels[i], table.scheme, base);
        for (const auto& e : table.states[i].entries()) {
            rows.push_back({label, std::to_string(shown(e.position, o.M, base)), phase_str(e.exponent, o.M)});
        }
    }
    if (fmt == Format::Table) {
        os << "basis " << o.type << ", M = " << o.M;
        if (split) os << ", split " << split->m1() << "*" << split->m2();
        os << ", labels " << (base == 1 ? "1-based" : "0-based") << '\n';
    }
    emit_rows(os, fmt, {"label", "position", "phase"}, rows);
}

// sqrt(num/den) in lowest terms.
std::string magnitude_str(const Overlap& ov) {
    if (ov.exact_zero) return "0";
    if (!ov.exact) return {};
    std::uint64_t num = ov.exact->coefficient * ov.exact->coefficient;
    std::uint64_t den = ov.denominator;
    const auto g = gcd(num, den);
    num /= g;
    den /= g;
    if (den == 1) {
        const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(num))));
        return r * r == num ? std::to_string(r) : "sqrt(" + std::to_string(num) + ")";
    }
    if (num == 1) return "1/sqrt(" + std::to_string(den) + ")";
    return "sqrt(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

void cmd_overlap(const Options& o, std::ostream& os) {
    require_materializable(o.M);
    const auto split = parse_split(o.split, o.M);
    const auto bra = basis_from_flags(o.bra, o.M, split);
    const auto ket = basis_from_flags(o.ket, o.M, split);
    const auto table = kernels::parallel::overlap_table(bra, ket);
    const int base = o.zero_based ? 0 : 1;
    const auto fmt = parse_format(o.format);

    if (fmt == Format::Json) {
        json j;
        j["M"] = o.M;
        j["bra"] = o.bra;
        j["ket"] = o.ket;
        if (split) j["split"] = json::array({split->m1(), split->m2()});
        j["index_base"] = base;
        auto& arr = j["entries"] = json::array();
        for (std::size_t i = 0; i < table.rows; ++i) {
            for (std::size_t k = 0; k < table.cols; ++k) {
                const auto& ov = table.at(i, k);
                json e;
                e["bra"] = label_json(bra.label(i), bra.scheme(), base);
                e["ket"] = label_json(ket.label(k), ket.scheme(), base);
                if (ov.exact_zero || ov.exact) {
                    e["magnitude"] = magnitude_str(ov);
                    e["phase"] = ov.exact ? json(phase_str(ov.exact->phase.exponent(), o.M)) : json(nullptr);
                } else {
                    e["magnitude"] = ov.magnitude();
                    e["phase"] = nullptr;
                    e["exact"] = false;
                }
                arr.push_back(e);
            }
        }
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.rows; ++i) {
        for (std::size_t k = 0; k < table.cols; ++k) {
            const auto& ov = table.at(i, k);
            std::string mag = magnitude_str(ov);
            if (mag.empty()) {
                std::ostringstream ss;
                ss.precision(12);
                ss << "~" << ov.magnitude();
                mag = ss.str();
            }
            rows.push_back({label_str(bra.label(i), bra.scheme(), base), label_str(ket.label(k), ket.scheme(), base), mag,
                            ov.exact ? phase_str(ov.exact->phase.exponent(), o.M) : ""});
        }
    }
    if (fmt == Format::Table) os << "<" << o.bra << "|" << o.ket << ">, M = " << o.M << '\n';
    emit_rows(os, fmt, {"bra", "ket", "magnitude", "phase"}, rows);
}

std::uint64_t resolve_max_dense(const Options& o, const std::optional<std::string>& env) {
    if (o.max_dense) return *o.max_dense;
    if (env && !env->empty()) return parse_u64(*env, "SCHWINGER_MAX_DENSE");
    return dense::kDefaultMaxDense;
}

int cmd_check(const Options& o, const std::optional<std::string>& env, std::ostream& os) {
    if (o.M > kMaxOperatorDimension) throw UsageError("check: M must be at most 2^31 - 1");
    SuiteOptions opts;
    opts.max_dense = resolve_max_dense(o, env);
    const std::set<std::string> selection(o.only.begin(), o.only.end());
    const auto results = run_suite(o.M, selection, opts);
    const auto summary = summarize(results);
    const auto fmt = parse_format(o.format);
    if (fmt == Format::Json) {
        os << report_to_json(o.M, results).dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            std::string detail;
            if (r.status == CheckStatus::Skipped) detail = r.reason;
            else if (r.witness) detail = r.witness->dump();
            for (const auto& n : r.notes) detail += (detail.empty() ? "" : "; ") + n;
            rows.push_back({r.check_id, std::string(to_string(r.status)), detail});
        }
        if (fmt == Format::Table) os << "check M = " << o.M << '\n';
        emit_rows(os, fmt, {"check", "status", "detail"}, rows);
        if (fmt == Format::Table) {
            os << summary.pass << " passed, " << summary.fail << " failed, " << summary.skipped << " skipped\n";
        }
    }
    return summary.fail == 0 ? 0 : 1;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const std::optional<std::string>& env_max_dense) {
    std::ostringstream out, err;
    CliResult result;

    CLI::App app{"Exact factorized representations of the finite Schwinger operator algebra"};
    app.name("schwinger");
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("M", o.M, "Hilbert space dimension")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
    };

    auto* factor = app.add_subcommand("factor", "Prime-power constituents m_j with L_j and N_j");
    add_common(factor);
    auto* roots = app.add_subcommand("roots", "Roots of x^2 = 1 mod M and their coprime splits");
    add_common(roots);

    auto* basis = app.add_subcommand("basis", "Materialize a labeled basis");
    add_common(basis);
    basis->add_option("--type", o.type, "position, momentum, kq, KQ, q1q2, k1k2, complete, complete-momentum")->required();
    basis->add_option("--split", o.split, "coprime split M1,M2");
    basis->add_flag("--zero-based", o.zero_based, "print internal 0-based labels and positions");

    auto* overlap = app.add_subcommand("overlap", "Exact overlap table between two bases");
    add_common(overlap);
    overlap->add_option("--bra", o.bra, "bra basis type")->required();
    overlap->add_option("--ket", o.ket, "ket basis type")->required();
    overlap->add_option("--split", o.split, "coprime split M1,M2");
    overlap->add_flag("--zero-based", o.zero_based, "print internal 0-based labels");

    auto* check = app.add_subcommand("check", "Run the verification suite");
    add_common(check);
    check->add_option("--only", o.only, "comma-separated check ids")->delimiter(',');
    check->add_option("--max-dense", o.max_dense, "dense-oracle budget (overrides SCHWINGER_MAX_DENSE)");

    std::vector<std::string> storage{"schwinger"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        result.exit_code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        return result;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        result.exit_code = 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        if (factor->parsed()) cmd_factor(o, out);
        else if (roots->parsed()) cmd_roots(o, out);
        else if (basis->parsed()) cmd_basis(o, out);
        else if (overlap->parsed()) cmd_overlap(o, out);
        else if (check->parsed()) result.exit_code = cmd_check(o, env_max_dense, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 2;
        out.str("");
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace schwinger
