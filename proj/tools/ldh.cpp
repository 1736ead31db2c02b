// ldh: command-line front end for the locating-domination library.
//
// Verbs: gen, lambda, verify, bounds, coincident, packing, oracle,
// construct, transform, check. Output is line-oriented key=value records;
// --pretty appends a human-readable block. Exit codes: 0 ok, 1 check
// failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ldh/checks.hpp"
#include "ldh/families.hpp"
#include "ldh/hypergraph.hpp"
#include "ldh/io.hpp"
#include "ldh/ld.hpp"
#include "ldh/partitions.hpp"
#include "ldh/transforms.hpp"

namespace {

std::string join_ids(const std::vector<int>& ids) {
    std::ostringstream o;
    for (size_t i = 0; i < ids.size(); ++i)
        o << (i ? "," : "") << ids[i];
    return o.str();
}

std::string quoted(const std::string& s) {
    if (s.find(' ') == std::string::npos && s.find('=') == std::string::npos)
        return s;
    return "\"" + s + "\"";
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw CLI::ValidationError("id list", "bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return std::make_pair(v, v);
    }
    return std::make_pair(std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2)));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        ldh::fail(ldh::errc::syntax_error, "cannot open output file: " + path);
    f << text;
}

// Options shared by gen / oracle / construct.
struct family_options {
    std::string family;
    int m = 0;
    int k = 0;
    int overlap = 1;
    int center = 1;
    int r = 2;
    int n = 0;
    std::string petals;
    std::string parts;

    void attach(CLI::App* cmd) {
        cmd->add_option("family", family,
                        "hyperpath|hypercycle|hyperstar|tpartite|complete|path|cycle")
            ->required();
        cmd->add_option("--m", m, "edge count");
        cmd->add_option("--k", k, "edge size");
        cmd->add_option("--overlap", overlap, "consecutive-edge overlap (default 1)");
        cmd->add_option("--center", center, "hyperstar center size (default 1)");
        cmd->add_option("--petals", petals, "hyperstar petal sizes, comma separated");
        cmd->add_option("--r", r, "t-partite edge size (default 2)");
        cmd->add_option("--parts", parts, "t-partite part sizes, comma separated");
        cmd->add_option("--n", n, "vertex count (complete/path/cycle)");
    }

    ldh::family_spec to_spec() const {
        ldh::family_spec s;
        if (family == "hyperpath")
            s.kind = ldh::family_kind::hyperpath;
        else if (family == "hypercycle")
            s.kind = ldh::family_kind::hypercycle;
        else if (family == "hyperstar")
            s.kind = ldh::family_kind::hyperstar;
        else if (family == "tpartite")
            s.kind = ldh::family_kind::complete_tpartite;
        else if (family == "complete")
            s.kind = ldh::family_kind::complete;
        else if (family == "path")
            s.kind = ldh::family_kind::simple_path;
        else if (family == "cycle")
            s.kind = ldh::family_kind::simple_cycle;
        else
            ldh::fail(ldh::errc::bad_family_params, "unknown family: " + family);
        s.m = m;
        s.k = k;
        s.overlap = overlap;
        s.center_size = center;
        s.r = r;
        s.n = n;
        if (!petals.empty())
            s.petal_sizes = parse_id_list(petals);
        if (!parts.empty())
            s.parts = parse_id_list(parts);
        return s;
    }
};

ldh::build_options build_opts(bool sperner, bool connected) {
    ldh::build_options o;
    o.require_sperner = sperner;
    o.require_connected = connected;
    return o;
}

void print_labels(const ldh::hypergraph& h) {
    if (h.labels().empty())
        return;
    for (int v = 0; v < h.vertex_count(); ++v)
        std::cout << "label=" << v << " name=" << quoted(h.labels()[static_cast<size_t>(v)])
                  << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"locating-domination toolkit for connected Sperner hypergraphs"};
    app.require_subcommand(1);

    bool pretty = false;
    bool labels = false;
    int max_n = 24;
    app.add_flag("--pretty", pretty, "append a human-readable block");
    app.add_flag("--labels", labels, "show vertex labels where available");
    app.add_option("--max-n", max_n, "solver size cap (default 24, hard limit 64)")
        ->envname("LDH_MAX_N");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family instance");
    family_options gen_fam;
    gen_fam.attach(gen);
    std::string gen_out;
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // lambda
    auto* lam = app.add_subcommand("lambda", "exact location-domination number");
    std::string lam_file;
    lam->add_option("file", lam_file, "hypergraph file")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "verify a candidate LD set");
    std::string ver_file, ver_set;
    ver->add_option("file", ver_file, "hypergraph file")->required();
    ver->add_option("--set", ver_set, "candidate set, comma separated ids")->required();

    // bounds
    auto* bnd = app.add_subcommand("bounds", "lower/upper bounds without solving");
    std::string bnd_file;
    bnd->add_option("file", bnd_file, "hypergraph file")->required();

    // coincident
    auto* coin = app.add_subcommand("coincident", "coincident-set partition");
    std::string coin_file;
    coin->add_option("file", coin_file, "hypergraph file")->required();

    // packing
    auto* pack = app.add_subcommand("packing", "maximum packing (lex-least witness)");
    std::string pack_file;
    pack->add_option("file", pack_file, "hypergraph file")->required();

    // oracle
    auto* ora = app.add_subcommand("oracle", "closed-form lambda prediction for a family");
    family_options ora_fam;
    ora_fam.attach(ora);

    // construct
    auto* con = app.add_subcommand("construct", "explicit LD set for a family");
    family_options con_fam;
    con_fam.attach(con);

    // transform
    auto* tra = app.add_subcommand("transform", "apply a structural transform");
    std::string tra_op, tra_file, tra_out;
    int tra_k = 2;
    tra->add_option("op", tra_op, "primal|dual|section|level|reduce")->required();
    tra->add_option("file", tra_file, "hypergraph file")->required();
    tra->add_option("--k", tra_k, "section size (section only, default 2)");
    tra->add_option("-o,--output", tra_out, "output file (default stdout)");

    // check
    auto* chk = app.add_subcommand("check", "run a theorem agreement suite");
    std::string chk_id, chk_m, chk_k, chk_n, chk_parts;
    chk->add_option("id", chk_id, "suite id (omit to list suites)");
    chk->add_option("--m", chk_m, "m range, lo..hi or single value");
    chk->add_option("--k", chk_k, "k range");
    chk->add_option("--n", chk_n, "n range");
    chk->add_option("--parts", chk_parts, "t-partite part sizes, comma separated");

    for (auto* sub : {gen, lam, ver, bnd, coin, pack, ora, con, tra, chk})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ldh::solve_options so;
    so.max_n = max_n;

    if (gen->parsed()) {
        ldh::hypergraph h = ldh::generate(gen_fam.to_spec());
        write_output(gen_out, ldh::serialize_hypergraph(h));
        return 0;
    }

    if (lam->parsed()) {
        ldh::hypergraph h = ldh::parse_hypergraph_file(lam_file, build_opts(false, false));
        auto cert = ldh::lambda_exact(h, so);
        std::cout << "lambda=" << cert.lambda << " set=" << join_ids(cert.set) << "\n";
        for (const auto& w : cert.warnings)
            std::cout << "warning=" << quoted(w) << "\n";
        if (labels)
            print_labels(h);
        if (pretty) {
            std::cout << "# minimum locating-dominating set of " << h.vertex_count()
                      << " vertices / " << h.edge_count() << " edges\n";
            for (int v : cert.set)
                std::cout << "#   vertex " << v << "\n";
        }
        return 0;
    }

    if (ver->parsed()) {
        ldh::hypergraph h = ldh::parse_hypergraph_file(ver_file, build_opts(false, false));
        auto rep = ldh::verify_ld(h, parse_id_list(ver_set));
        std::cout << "verdict=" << ldh::ld_verdict_name(rep.verdict);
        if (rep.witness_vertex)
            std::cout << " witness_vertex=" << *rep.witness_vertex;
        if (rep.witness_pair)
            std::cout << " witness_pair=" << rep.witness_pair->first << ","
                      << rep.witness_pair->second;
        std::cout << "\n";
        if (pretty)
            for (const auto& [v, trace] : rep.traces)
                std::cout << "# N(" << v << ") & S = {" << join_ids(trace) << "}\n";
        return rep.valid() ? 0 : 1;
    }

    if (bnd->parsed()) {
        ldh::hypergraph h = ldh::parse_hypergraph_file(bnd_file, build_opts(false, false));
        auto b = ldh::bounds(h);
        std::cout << "lower_coincident=" << b.lower_coincident
                  << " upper_trivial=" << b.upper_trivial << "\n";
        if (b.packing_number)
            std::cout << "packing_number=" << *b.packing_number
                      << " upper_packing=" << *b.upper_packing << "\n";
        if (b.partite_parts) {
            std::cout << "partite_parts=" << join_ids(*b.partite_parts)
                      << " partite_lower=" << *b.partite_lower << "\n";
        }
        return 0;
    }

    if (coin->parsed()) {
        ldh::hypergraph h = ldh::parse_hypergraph_file(coin_file, build_opts(false, false));
        auto part = ldh::coincident_partition(h);
        std::cout << "cells=" << part.cell_count()
                  << " lower_coincident=" << part.sum_all_but_one() << "\n";
        int idx = 0;
        for (const auto& c : part.cells) {
            std::cout << "cell=" << idx++ << " degree=" << c.degree
                      << " edges=" << join_ids(c.edge_set) << " members=" << join_ids(c.members)
                      << "\n";
        }
        return 0;
    }

    if (pack->parsed()) {
        ldh::hypergraph h = ldh::parse_hypergraph_file(pack_file, build_opts(false, false));
        auto pk = ldh::max_packing(h);
        std::cout << "pi=" << pk.members.size() << " packing=" << join_ids(pk.members) << "\n";
        return 0;
    }

    if (ora->parsed()) {
        auto pred = ldh::predicted_lambda(ora_fam.to_spec());
        if (pred.preconditions_met)
            std::cout << "preconditions=met theorem=" << pred.theorem << " lambda=" << pred.value
                      << "\n";
        else
            std::cout << "preconditions=unmet reason=" << quoted(pred.reason) << "\n";
        return 0;
    }

    if (con->parsed()) {
        ldh::family_spec spec = con_fam.to_spec();
        auto c = ldh::construct_ld_set(spec);
        ldh::hypergraph h = ldh::generate(spec);
        bool ok = ldh::verify_ld(h, c.set).valid();
        std::cout << "theorem=" << c.theorem << " size=" << c.set.size()
                  << " set=" << join_ids(c.set) << " verified=" << (ok ? "yes" : "no") << "\n";
        return ok ? 0 : 1;
    }

    if (tra->parsed()) {
        ldh::hypergraph h = ldh::parse_hypergraph_file(tra_file, build_opts(false, false));
        ldh::hypergraph out = [&] {
            if (tra_op == "primal")
                return ldh::primal_middle(h);
            if (tra_op == "dual")
                return ldh::dual(h);
            if (tra_op == "section")
                return ldh::k_section(h, tra_k);
            if (tra_op == "level")
                return ldh::level_hypergraph(h).quotient;
            if (tra_op == "reduce")
                return ldh::reduce_sperner(h);
            ldh::fail(ldh::errc::bad_family_params, "unknown transform: " + tra_op);
        }();
        std::string text = ldh::serialize_hypergraph(out);
        if (labels && !out.labels().empty()) {
            std::ostringstream extra;
            for (int v = 0; v < out.vertex_count(); ++v)
                extra << "# label " << v << " " << out.labels()[static_cast<size_t>(v)] << "\n";
            text += extra.str();
        }
        write_output(tra_out, text);
        return 0;
    }

    if (chk->parsed()) {
        if (chk_id.empty()) {
            for (const auto& [id, desc] : ldh::known_checks())
                std::cout << "check=" << id << " description=" << quoted(desc) << "\n";
            return 0;
        }
        ldh::check_params params;
        params.max_n = max_n;
        params.m_range = parse_range(chk_m);
        params.k_range = parse_range(chk_k);
        params.n_range = parse_range(chk_n);
        if (!chk_parts.empty())
            params.parts = parse_id_list(chk_parts);
        auto rep = ldh::run_check(chk_id, params);
        std::cout << "check=" << rep.id << "\n";
        for (const auto& r : rep.results)
            std::cout << "tuple=" << quoted(r.tuple) << " result=" << (r.pass ? "PASS" : "FAIL")
                      << " detail=" << quoted(r.detail) << "\n";
        std::cout << "summary pass=" << rep.results.size() - rep.failed_count()
                  << " fail=" << rep.failed_count() << "\n";
        return rep.all_pass() ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ldh::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
