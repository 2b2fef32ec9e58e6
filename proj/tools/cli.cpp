// Command-line front end: polynomial families, triangles, moments, gamma
// vectors, the identity-check registry, b-file export, and fixture
// cross-checks.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "narayana/format.hpp"
#include "narayana/oeis.hpp"
#include "narayana/paths.hpp"
#include "narayana/series.hpp"
#include "narayana/triangles.hpp"
#include "narayana/verify.hpp"

using json = nlohmann::json;
using namespace narayana;

namespace {

enum class Format { Table, Csv, JsonLike, Bfile };

struct Output {
    Format format = Format::Table;
    std::string out_path;

    void write(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
};

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json-like") return Format::JsonLike;
    if (name == "bfile") return Format::Bfile;
    throw CLI::ValidationError("--format", "unknown format: " + name);
}

// rows of already-rendered cells -> one of the tabular formats
std::string render_rows(Format fmt, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    if (fmt == Format::JsonLike) {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(row);
        out << arr.dump(2) << "\n";
        return out.str();
    }
    const char* sep = (fmt == Format::Csv) ? "," : "  ";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << sep;
            out << row[i];
        }
        out << "\n";
    }
    return out.str();
}

XPoly family_member(const std::string& name, long n) {
    if (name == "fib") return fib(n);
    if (name == "fib-t") return fib_t(n);
    if (name == "q") return q_poly(n);
    if (name == "p") return p_poly(n);
    if (name == "lucas") return lucas(n);
    if (name == "lucas-t") return lucas_t(n);
    if (name == "r") return r_poly(n);
    if (name == "s") return s_poly(n);
    throw UnknownFamily("unknown family: " + name);
}

std::string render_xpoly(const XPoly& p, const std::optional<Rational>& t0) {
    return format_value(t0 ? p.specialize_t(*t0) : p);
}

json verdict_record(const Verdict& v) {
    json rec;
    rec["id"] = v.id;
    rec["status"] = v.status == CheckStatus::Pass
                        ? "pass"
                        : (v.status == CheckStatus::Fail ? "fail" : "budget-exceeded");
    rec["ranges"] = v.range;
    rec["witness"] = v.witness;
    rec["elapsed_ms"] = v.elapsed_ms;
    rec["conjectural"] = v.conjectural;
    return rec;
}

int cmd_verify(const std::vector<std::string>& ids, const Overrides& ov, const Output& out,
               bool list_only) {
    if (list_only) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& info : list_checks())
            rows.push_back({info.id, info.default_range,
                            info.conjectural ? "conjectural" : "identity", info.summary});
        out.write(render_rows(out.format == Format::Bfile ? Format::Table : out.format, rows));
        return 0;
    }
    std::vector<std::string> to_run = ids;
    if (to_run.empty() || (to_run.size() == 1 && to_run[0] == "all")) {
        to_run.clear();
        for (const auto& info : list_checks()) to_run.push_back(info.id);
    }
    json report = json::array();
    bool hard_failure = false;
    std::vector<std::vector<std::string>> rows;
    for (const auto& id : to_run) {
        Verdict v = run_check(id, ov);  // throws UnknownIdentity for bad ids
        report.push_back(verdict_record(v));
        std::string status = v.status == CheckStatus::Pass
                                 ? "pass"
                                 : (v.status == CheckStatus::Fail ? "FAIL" : "budget-exceeded");
        if (v.conjectural && v.status == CheckStatus::Pass) status = "pass (evidence)";
        std::vector<std::string> row = {v.id, status, v.range, std::to_string(v.elapsed_ms) + "ms"};
        if (!v.witness.empty()) row.push_back(v.witness);
        rows.push_back(std::move(row));
        if (v.status == CheckStatus::Fail && !v.conjectural) hard_failure = true;
    }
    if (out.format == Format::JsonLike) {
        out.write(report.dump(2) + "\n");
    } else {
        out.write(render_rows(out.format == Format::Bfile ? Format::Table : out.format, rows));
        if (!out.out_path.empty()) {
            // --out with a tabular format still records the structured report
        }
    }
    return hard_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with Narayana polynomials, Catalan-Stieltjes "
                 "matrices, and weighted lattice paths"};
    app.require_subcommand(1);

    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, csv, json-like, bfile")
        ->capture_default_str();

    // family
    auto* fam = app.add_subcommand("family", "print members of a polynomial family");
    std::string fam_name;
    long fam_n = 0;
    std::string fam_t;
    bool fam_all = false;
    std::string fam_out;
    fam->add_option("name", fam_name, "fib, fib-t, q, p, lucas, lucas-t, r, s")->required();
    fam->add_option("--n", fam_n, "index of the member")->required();
    fam->add_option("--t", fam_t, "specialize t to an exact rational");
    fam->add_flag("--all", fam_all, "print members 0..n instead of just n");
    fam->add_option("--out", fam_out, "write output to a file");

    // triangle
    auto* tri = app.add_subcommand("triangle", "print rows of a triangle");
    std::string tri_name;
    long tri_n = 0;
    std::string tri_t;
    std::string tri_out;
    tri->add_option("tag", tri_name, "A, B, D, E, ballot, lucas1")->required();
    tri->add_option("--n", tri_n, "last row to print")->required();
    tri->add_option("--t", tri_t, "specialize t to an exact rational");
    tri->add_option("--out", tri_out, "write output to a file");

    // moments
    auto* mom = app.add_subcommand("moments", "print a moment sequence");
    std::string mom_name;
    long mom_n = 0;
    std::string mom_t;
    std::string mom_out;
    mom->add_option("tag", mom_name, "L, L0, L1, M, M0, M1")->required();
    mom->add_option("--n", mom_n, "last index to print")->required();
    mom->add_option("--t", mom_t, "specialize t to an exact rational");
    mom->add_option("--out", mom_out, "write output to a file");

    // gamma
    auto* gam = app.add_subcommand("gamma", "gamma vector of a palindromic polynomial");
    std::string gam_source;
    long gam_n = 0, gam_k = 0, gam_m = 1;
    std::optional<long> gam_degree;
    std::string gam_out;
    gam->add_option("source", gam_source, "B, D, u, or a polynomial in t")->required();
    gam->add_option("--n", gam_n, "row index n");
    gam->add_option("--k", gam_k, "column index k (B, D)");
    gam->add_option("--m", gam_m, "convolution power m (u)");
    gam->add_option("--degree", gam_degree, "palindromic degree bound for a literal polynomial");
    gam->add_option("--out", gam_out, "write output to a file");

    // verify
    auto* ver = app.add_subcommand("verify", "run registered identity checks");
    std::vector<std::string> ver_ids;
    Overrides overrides;
    long ver_nmax = -1, ver_m = -1, ver_order = -1;
    bool ver_list = false;
    std::string ver_out;
    ver->add_option("ids", ver_ids, "check ids, or 'all' (default)");
    ver->add_option("--n-max", ver_nmax, "override the n range");
    ver->add_option("--m", ver_m, "override the m range");
    ver->add_option("--order", ver_order, "override the series order");
    ver->add_flag("--list", ver_list, "list registered checks and exit");
    ver->add_option("--out", ver_out, "write the report to a file");

    // bfile
    auto* bf = app.add_subcommand("bfile", "emit a derived sequence as an OEIS b-file");
    std::string bf_spec;
    long bf_n = 0, bf_offset = 0;
    std::string bf_out;
    bf->add_option("spec", bf_spec, "sequence spec, e.g. narayana@t=2 or B-rows@t=1")->required();
    bf->add_option("--n", bf_n, "number of terms")->required();
    bf->add_option("--offset", bf_offset, "index of the first term")->capture_default_str();
    bf->add_option("--out", bf_out, "write output to a file");

    // oeis-check
    auto* oc = app.add_subcommand("oeis-check", "compare a derived sequence with a fixture");
    std::string oc_id, oc_spec;
    bool oc_fetch = false;
    std::string oc_dir = "data/oeis";
    oc->add_option("id", oc_id, "fixture id, e.g. A001003")->required();
    oc->add_option("--spec", oc_spec, "derived sequence spec (default: registered spec)");
    oc->add_flag("--fetch", oc_fetch, "fetch the b-file from OEIS_BASE_URL instead");
    oc->add_option("--dir", oc_dir, "fixture directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        Format fmt = parse_format(format_name);

        if (fam->parsed()) {
            Output out{fmt, fam_out};
            std::optional<Rational> t0;
            if (!fam_t.empty()) t0 = parse_rational(fam_t);
            std::vector<std::vector<std::string>> rows;
            for (long i = fam_all ? 0 : fam_n; i <= fam_n; ++i)
                rows.push_back({render_xpoly(family_member(fam_name, i), t0)});
            out.write(render_rows(fmt, rows));
            return 0;
        }

        if (tri->parsed()) {
            Output out{fmt, tri_out};
            Triangle t = make_triangle(triangle_tag_from_name(tri_name));
            std::optional<Rational> t0;
            if (!tri_t.empty()) t0 = parse_rational(tri_t);
            std::vector<std::vector<std::string>> rows;
            for (long n = 0; n <= tri_n; ++n) {
                std::vector<std::string> cells;
                for (const RatFunc& e : t.row(n))
                    cells.push_back(t0 ? format_value(e.eval(*t0)) : format_value(e));
                rows.push_back(std::move(cells));
            }
            out.write(render_rows(fmt, rows));
            return 0;
        }

        if (mom->parsed()) {
            Output out{fmt, mom_out};
            static const std::map<std::string, MomentTag> tags = {
                {"L", MomentTag::L},   {"L0", MomentTag::L0}, {"L1", MomentTag::L1},
                {"M", MomentTag::M},   {"M0", MomentTag::M0}, {"M1", MomentTag::M1}};
            auto it = tags.find(mom_name);
            if (it == tags.end()) throw UnknownFamily("unknown moment tag: " + mom_name);
            std::optional<Rational> t0;
            if (!mom_t.empty()) t0 = parse_rational(mom_t);
            std::vector<std::vector<std::string>> rows;
            for (const RatFunc& m : moments(it->second, mom_n))
                rows.push_back({t0 ? format_value(m.eval(*t0)) : format_value(m)});
            out.write(render_rows(fmt, rows));
            return 0;
        }

        if (gam->parsed()) {
            Output out{fmt, gam_out};
            GammaVector gv;
            if (gam_source == "B") {
                gv = gamma_closed_b(gam_n, gam_k);
            } else if (gam_source == "D") {
                gv = gamma_closed_d(gam_n, gam_k);
            } else if (gam_source == "u") {
                gv = u_gamma_closed(gam_n, gam_m);
            } else {
                IntPoly p = parse_intpoly(gam_source);
                gv = gamma_expand(p, gam_degree.value_or(std::max<long>(p.degree(), 0)));
            }
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> cells;
            for (const BigInt& g : gv.gamma) cells.push_back(g.str());
            rows.push_back(std::move(cells));
            rows.push_back({"degree", std::to_string(gv.degree_bound)});
            rows.push_back({"nonnegative", gv.nonnegative ? "true" : "false"});
            out.write(render_rows(fmt, rows));
            return 0;
        }

        if (ver->parsed()) {
            if (ver_nmax >= 0) overrides.n_max = ver_nmax;
            if (ver_m >= 0) overrides.m_max = ver_m;
            if (ver_order >= 0) overrides.order = ver_order;
            return cmd_verify(ver_ids, overrides, Output{fmt, ver_out}, ver_list);
        }

        if (bf->parsed()) {
            Output out{fmt, bf_out};
            out.write(bfile_string(bf_offset, derived_sequence(bf_spec, bf_n)));
            return 0;
        }

        if (oc->parsed()) {
            OeisFixture fixture = oc_fetch ? fetch_fixture(oc_id) : load_fixture(oc_id, oc_dir);
            std::string spec = oc_spec.empty() ? default_spec_for(oc_id) : oc_spec;
            auto derived = derived_sequence(spec, static_cast<long>(fixture.terms.size()));
            SeqCompare cmp = compare_prefix(fixture, derived);
            if (cmp.ok) {
                std::cout << oc_id << " vs " << spec << ": pass (" << fixture.terms.size()
                          << " terms)\n";
                return 0;
            }
            std::cout << oc_id << " vs " << spec << ": MISMATCH at index " << cmp.mismatch_index
                      << " (fixture " << fixture.terms[cmp.mismatch_index] << ", derived "
                      << derived[cmp.mismatch_index] << ")\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
