#include "polygraph/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/geometry.hpp"
#include "polygraph/io.hpp"
#include "polygraph/obstructions.hpp"
#include "polygraph/simple_check.hpp"

namespace polygraph::cli {

using nlohmann::json;
namespace ob = obstructions;
namespace geo = geometry;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

int to_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("expected an integer, got '" + s + "'");
    return v;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) out.push_back(to_int(t));
    return out;
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

Graph parse_single(const std::string& t) {
    if (is_file(t)) return load_graph_file(t);
    if (t.find(':') != std::string::npos) return parse_graph_tokens(split(t, ':'));
    auto fams = named_graph_families();
    if (std::find(fams.begin(), fams.end(), t) != fams.end()) return named_graph(t, {});
    return parse_graph6(t);
}

geo::Polytope parse_polytope(const std::string& t) {
    if (is_file(t)) {
        std::ifstream in(t);
        json j = json::parse(in);
        // construct output wraps the polytope
        if (j.contains("polytope")) j = j["polytope"];
        return geo::polytope_from_json(j);
    }
    auto parts = split(t, ':');
    if (parts.empty()) throw UsageError("empty polytope spec");
    std::vector<int> params;
    for (std::size_t i = 1; i < parts.size(); ++i) params.push_back(to_int(parts[i]));
    return geo::named_polytope(parts[0], params);
}

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* e = std::getenv("POLYGRAPH_THREADS")) {
        int v = 0;
        try {
            v = std::stoi(e);
        } catch (const std::exception&) {
            throw UsageError("POLYGRAPH_THREADS must be a positive integer");
        }
        if (v < 1) throw UsageError("POLYGRAPH_THREADS must be a positive integer");
        return std::min(hw, static_cast<unsigned>(v));
    }
    return hw;
}

struct Common {
    std::uint64_t budget_nodes = 10'000'000;
    int sep_cap = 8;
    std::size_t hull_cap = 64;
    std::string format;
    std::string out;

    ob::RangeBudget range_budget() const {
        if (budget_nodes == 0 || sep_cap < 1 || hull_cap == 0) throw UsageError("budgets must be positive");
        ob::RangeBudget b;
        b.search_nodes = budget_nodes;
        b.sep_cap = sep_cap;
        b.hull_cap = hull_cap;
        b.threads = thread_cap();
        return b;
    }
};

void add_common(CLI::App* sub, Common& c, bool formats) {
    sub->add_option("--budget-nodes", c.budget_nodes, "search node budget");
    sub->add_option("--sep-cap", c.sep_cap, "largest separator size examined");
    sub->add_option("--hull-cap", c.hull_cap, "largest point set handed to the hull");
    if (formats) sub->add_option("--format", c.format, "json | md | graph6")->check(CLI::IsMember({"json", "md", "graph6"}));
    sub->add_option("--out", c.out, "write output here instead of stdout");
}

std::string rule_of(const ob::DimensionVerdict& v) {
    if (!v.certificate.is_object()) return "";
    std::string r = v.certificate.value("rule", "");
    if (v.certificate.contains("corroboration")) r += " + " + v.certificate["corroboration"].value("rule", "");
    return r;
}

std::string set_string(const std::vector<int>& s) {
    if (s.empty()) return "{}";
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

std::string report_md(const ob::ObstructionReport& r) {
    std::ostringstream o;
    o << "# " << (r.graph.label().empty() ? to_graph6(r.graph) : r.graph.label()) << "\n\n";
    o << "graph6 `" << to_graph6(r.graph) << "`, " << r.graph.order() << " vertices, " << r.graph.size()
      << " edges\n\n";
    o << "| d | status | rule | reason |\n|---|---|---|---|\n";
    for (const auto& v : r.verdicts)
        o << "| " << v.d << " | " << ob::status_name(v.status) << " | " << rule_of(v) << " | " << v.reason << " |\n";
    o << "\nopen " << set_string(r.open) << ", confirmed " << set_string(r.confirmed) << "\n";
    return o.str();
}

json psp_json(const ob::PspResult& r) {
    static const char* names[] = {"witness", "failed", "budget"};
    json j{{"status", names[static_cast<int>(r.status)]}, {"reason", r.reason}, {"nodes", r.nodes}};
    if (r.failing >= 0) j["failing"] = r.failing;
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"principal", w.principal}, {"branch", w.branch}, {"paths", w.paths}});
    j["witnesses"] = ws;
    return j;
}

json separation_json(const ob::SeparationResult& r) {
    static const char* names[] = {"pass", "fail", "incomplete"};
    json lv = json::array();
    for (const auto& l : r.levels)
        lv.push_back({{"n", l.n}, {"bound", l.bound}, {"method", l.method}, {"worst", l.worst}});
    return {{"status", names[static_cast<int>(r.status)]},
            {"separator", r.separator},
            {"components", r.components},
            {"bound", r.bound},
            {"cap", r.cap},
            {"levels", lv}};
}

json steinitz_json(const ob::SteinitzResult& s) {
    json j{{"yes", s.yes}, {"reason", s.reason}};
    if (!s.planarity.planar) {
        json es = json::array();
        for (const auto& e : s.planarity.kuratowski) es.push_back({e.u, e.v});
        j["kuratowski"] = es;
    } else if (!s.yes) {
        j["cut"] = s.cut;
    }
    return j;
}

// one row per connected circulant on n <= max_n vertices, isomorphism classes
// kept at their first connection set in (n, lexicographic set) order
json circulant_table(int max_n, const ob::RangeBudget& b) {
    std::vector<Graph> seen;
    json rows = json::array();
    for (int n = 2; n <= max_n; ++n) {
        int h = n / 2;
        std::vector<std::vector<int>> sets;
        for (int mask = 1; mask < (1 << h); ++mask) {
            std::vector<int> S;
            for (int i = 0; i < h; ++i)
                if (mask >> i & 1) S.push_back(i + 1);
            sets.push_back(S);
        }
        std::sort(sets.begin(), sets.end());
        for (const auto& S : sets) {
            Graph g = circulant(n, S);
            if (!is_connected(g)) continue;
            bool dup = false;
            for (const auto& x : seen)
                if (x.order() == g.order() && x.size() == g.size() && are_isomorphic(x, g)) dup = true;
            if (dup) continue;
            seen.push_back(g);
            auto r = ob::polytopality_range(g, b);
            json vs = json::array();
            for (const auto& v : r.verdicts)
                vs.push_back({{"d", v.d}, {"status", ob::status_name(v.status)}, {"rule", rule_of(v)}});
            rows.push_back({{"graph", "C" + std::to_string(n) + "(" + describe_set(S) + ")"},
                            {"n", n},
                            {"S", S},
                            {"graph6", to_graph6(g)},
                            {"range", r.open},
                            {"confirmed", r.confirmed},
                            {"verdicts", vs}});
        }
    }
    return {{"max_n", max_n}, {"rows", rows}};
}

std::string table_md(const json& t) {
    std::ostringstream o;
    o << "| graph | n | graph6 | range | certificates |\n|---|---|---|---|---|\n";
    for (const auto& r : t["rows"]) {
        std::string certs;
        for (const auto& v : r["verdicts"]) {
            if (!certs.empty()) certs += "; ";
            certs += std::to_string(v["d"].get<int>()) + ": " + v["status"].get<std::string>();
            if (!v["rule"].get<std::string>().empty()) certs += " " + v["rule"].get<std::string>();
        }
        o << "| " << r["graph"].get<std::string>() << " | " << r["n"] << " | `" << r["graph6"].get<std::string>()
          << "` | " << set_string(r["range"].get<std::vector<int>>()) << " | " << certs << " |\n";
    }
    return o.str();
}

// --p/--q names of the four lifted-product witnesses
std::string witness_for(const std::string& p, const std::string& q) {
    static const std::vector<std::array<std::string, 3>> known = {
        {"triangle", "segment-midpoint", "triangle-path"},
        {"segment", "square-split", "segment-square"},
        {"segment", "octahedron-star", "segment-octahedron-star"},
        {"domino", "domino", "domino-domino"},
    };
    for (const auto& k : known)
        if (k[0] == p && k[1] == q) return k[2];
    std::string msg = "unknown lifted product --p " + p + " --q " + q + "; known pairs:";
    for (const auto& k : known) msg += " (" + k[0] + ", " + k[1] + ")";
    throw UsageError(msg);
}

json graph_block(const Graph& g) {
    json j = graph_to_json(g);
    j["graph6"] = to_graph6(g);
    return j;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

// every transcript embedded in a report, keyed by where it sits
void collect_transcripts(const json& j, const std::string& at, std::vector<std::pair<std::string, std::vector<std::string>>>& out) {
    if (j.is_object()) {
        if (j.contains("transcript") && j["transcript"].is_array()) out.push_back({at, j["transcript"].get<std::vector<std::string>>()});
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "transcript") collect_transcripts(it.value(), at + "/" + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) collect_transcripts(j[i], at + "/" + std::to_string(i), out);
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

}  // namespace

Graph parse_graph_tokens(const std::vector<std::string>& t) {
    if (t.empty()) throw UsageError("missing graph");
    const std::string& head = t[0];
    if (head == "circulant") {
        if (t.size() != 3) throw UsageError("circulant takes n and a comma separated connection set");
        return circulant(to_int(t[1]), int_list(t[2]));
    }
    if (head == "product") {
        if (t.size() < 3) throw UsageError("product takes at least two graphs");
        std::vector<Graph> fs;
        for (std::size_t i = 1; i < t.size(); ++i) fs.push_back(parse_single(t[i]));
        return cartesian_product(fs);
    }
    if (head == "join") {
        if (t.size() != 3) throw UsageError("join takes two graphs");
        return graph_join(parse_single(t[1]), parse_single(t[2]));
    }
    if (head == "star-clique") {
        if (t.size() != 3) throw UsageError("star-clique takes a graph and a vertex");
        return star_clique(parse_single(t[1]), to_int(t[2]));
    }
    auto fams = named_graph_families();
    if (std::find(fams.begin(), fams.end(), head) != fams.end()) {
        std::vector<int> p;
        for (std::size_t i = 1; i < t.size(); ++i) p.push_back(to_int(t[i]));
        return named_graph(head, p);
    }
    if (t.size() != 1) throw UsageError("unknown graph family '" + head + "'");
    return parse_single(head);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polytopality of graphs: obstructions, refutations and exact witnesses", "polygraph"};
    app.require_subcommand(1);
    Common c;

    std::vector<std::string> graph_tokens;
    auto* gen = app.add_subcommand("gen", "emit a graph (graph6 line, then JSON)");
    gen->add_option("graph", graph_tokens, "graph tokens")->required();
    add_common(gen, c, true);

    auto* range = app.add_subcommand("range", "polytopality range report");
    range->add_option("graph", graph_tokens, "graph tokens")->required();
    add_common(range, c, true);

    std::string check_name;
    int dim = 0;
    int vertex = -1;
    int cand_cap = 0;
    std::string transcript_out;
    auto* check = app.add_subcommand("check", "run one obstruction");
    check->add_option("obstruction", check_name, "balinski psp separation steinitz whitney star-clique required-2faces simple candidates facet-search product-rule")
        ->required()
        ->check(CLI::IsMember({"balinski", "psp", "separation", "steinitz", "whitney", "star-clique", "required-2faces",
                               "simple", "candidates", "facet-search", "product-rule"}));
    check->add_option("graph", graph_tokens, "graph tokens")->required();
    check->add_option("--d", dim, "dimension");
    check->add_option("--vertex", vertex, "psp: check only this vertex");
    check->add_option("--cap", cand_cap, "candidates: size cap (default |V| - 1)");
    check->add_option("--transcript", transcript_out, "facet-search: write the transcript here");
    add_common(check, c, false);

    std::string what, pspec, qspec;
    std::vector<std::string> params;
    int trunc_vertex = -1;
    bool want_lattice = false, want_schlegel = false;
    auto* construct = app.add_subcommand("construct", "build a polytope with exact coordinates");
    construct->add_option("what", what, "named polytope, lifted-product, product, join, truncate, steinitz")->required();
    construct->add_option("params", params, "integer parameters or graph tokens");
    construct->add_option("--p", pspec, "first operand");
    construct->add_option("--q", qspec, "second operand");
    construct->add_option("--vertex", trunc_vertex, "truncate: vertex index");
    construct->add_flag("--lattice", want_lattice, "include the face lattice");
    construct->add_flag("--schlegel", want_schlegel, "include 3D projection coordinates");
    add_common(construct, c, false);

    std::string poly_path;
    auto* verify = app.add_subcommand("verify", "compare a polytope skeleton with a graph");
    verify->add_option("polytope", poly_path, "polytope JSON file or spec (cube:3)")->required();
    verify->add_option("graph", graph_tokens, "graph tokens")->required();
    add_common(verify, c, false);

    std::string transcript_path;
    auto* replay = app.add_subcommand("replay", "re-validate refutation transcripts");
    replay->add_option("transcript", transcript_path, "JSON-lines transcript or report JSON")->required()->check(CLI::ExistingFile);
    replay->add_option("graph", graph_tokens, "graph tokens (default: graph6 in the transcript header)");
    add_common(replay, c, false);

    int max_n = 8;
    auto* table = app.add_subcommand("table", "polytopality ranges of connected circulant graphs");
    table->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(2, 12));
    add_common(table, c, true);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "polygraph: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) {
            Graph g = parse_graph_tokens(graph_tokens);
            std::string text;
            if (c.format == "graph6") text = to_graph6(g) + "\n";
            else if (c.format == "json") text = graph_block(g).dump(2) + "\n";
            else if (c.format == "md") throw UsageError("gen emits graph6 or json");
            else text = to_graph6(g) + "\n" + graph_block(g).dump(2) + "\n";
            emit(text, c.out, out);
            return kOk;
        }
        if (*range) {
            Graph g = parse_graph_tokens(graph_tokens);
            auto r = ob::polytopality_range(g, c.range_budget());
            if (c.format == "graph6") throw UsageError("range emits json or md");
            emit(c.format == "md" ? report_md(r) : r.to_json().dump(2) + "\n", c.out, out);
            return kOk;
        }
        if (*check) {
            Graph g = parse_graph_tokens(graph_tokens);
            auto b = c.range_budget();
            auto need_d = [&] {
                if (dim < 1) throw UsageError(check_name + " needs --d");
            };
            json j{{"obstruction", check_name}, {"graph", graph_block(g)}};
            if (dim > 0) j["d"] = dim;
            if (check_name == "balinski") {
                need_d();
                auto r = ob::balinski_check(g, dim);
                j["result"] = {{"pass", r.pass}, {"kappa", r.kappa}, {"cut", r.cut}, {"reason", r.reason}};
            } else if (check_name == "psp") {
                need_d();
                ob::PspOptions o;
                o.node_budget = b.psp_nodes;
                std::optional<Vertex> v;
                if (vertex >= 0) v = vertex;
                j["result"] = psp_json(ob::psp_check(g, dim, v, o));
            } else if (check_name == "separation") {
                need_d();
                j["result"] = separation_json(ob::separation_check(g, dim, std::min(b.sep_cap, g.order())));
            } else if (check_name == "steinitz") {
                j["result"] = steinitz_json(ob::steinitz_decide(g));
            } else if (check_name == "whitney") {
                j["result"] = {{"faces", ob::whitney_2faces(g)}};
            } else if (check_name == "star-clique") {
                json cs = json::array();
                for (const auto& k : ob::reverse_star_clique(g))
                    cs.push_back({{"clique", k.clique}, {"contracted", to_graph6(k.contracted)}});
                j["result"]["contractions"] = cs;
                if (auto chain = ob::star_clique_obstruction(g))
                    j["result"]["chain"] = {{"cliques", chain->cliques}, {"final", to_graph6(chain->final_graph)}};
                else
                    j["result"]["chain"] = nullptr;
            } else if (check_name == "required-2faces") {
                need_d();
                auto r = simple::required_2faces(g, dim);
                j["result"]["cycles"] = r.cycles;
                if (r.conflict)
                    j["result"]["conflict"] = {{"a", r.conflict->a}, {"b", r.conflict->b}, {"shared", r.conflict->shared}};
                else
                    j["result"]["conflict"] = nullptr;
            } else if (check_name == "simple") {
                need_d();
                json os = json::array();
                for (const auto& o : simple::simple_obstructions_all(g, dim))
                    os.push_back({{"id", o.id}, {"witness", o.witness}, {"witness2", o.witness2}});
                j["result"]["obstructions"] = os;
            } else if (check_name == "candidates") {
                simple::EnumerationOptions o;
                o.node_budget = b.search_nodes;
                int cap = cand_cap > 0 ? cand_cap : g.order() - 1;
                auto r = simple::enumerate_candidate_facets(g, cap, o);
                json fs = json::array();
                for (const auto& f : r.faces) fs.push_back({{"vertices", f.vlist}, {"two_faces", f.two_faces}});
                j["result"] = {{"complete", r.complete}, {"nodes", r.nodes}, {"cap", cap}, {"faces", fs}};
            } else if (check_name == "facet-search") {
                need_d();
                simple::SearchBudget sb;
                sb.nodes = b.search_nodes;
                auto r = simple::facet_complex_search(g, dim, sb);
                j["result"] = {{"outcome", simple::outcome_name(r.outcome)},
                               {"mode", r.mode},
                               {"layer", r.layer},
                               {"nodes", r.nodes},
                               {"transcript_complete", r.transcript_complete},
                               {"transcript_hash", r.transcript_hash},
                               {"complex", r.complex}};
                if (!transcript_out.empty()) {
                    std::string t;
                    for (const auto& l : r.transcript) t += l + "\n";
                    emit(t, transcript_out, out);
                }
            } else if (check_name == "product-rule") {
                simple::SearchBudget sb;
                sb.nodes = b.search_nodes;
                auto r = simple::product_factor_check(g, nullptr, sb);
                json fs = json::array();
                for (const auto& f : r.factors)
                    fs.push_back({{"factor", to_graph6(f.factor)}, {"degree", f.degree}, {"status", f.status}, {"reason", f.reason}});
                j["result"] = {{"applicable", r.applicable}, {"factors", fs}};
                j["result"]["excluded_dimension"] = r.excluded_dimension ? json(*r.excluded_dimension) : json(nullptr);
            }
            emit(j.dump(2) + "\n", c.out, out);
            return kOk;
        }
        if (*construct) {
            geo::Polytope p;
            std::optional<Graph> expected;
            if (what == "lifted-product") {
                if (pspec.empty() || qspec.empty()) throw UsageError("lifted-product needs --p and --q");
                auto w = geo::lifted_product_witness(witness_for(pspec, qspec));
                p = w.polytope;
                expected = w.expected;
            } else if (what == "product" || what == "join") {
                if (pspec.empty() || qspec.empty()) throw UsageError(what + " needs --p and --q");
                auto a = parse_polytope(pspec), bq = parse_polytope(qspec);
                p = what == "product" ? geo::product_polytope(a, bq) : geo::join_polytope(a, bq);
                if (what == "product") expected = cartesian_product(geo::skeleton_graph(a), geo::skeleton_graph(bq));
            } else if (what == "truncate") {
                if (pspec.empty() || trunc_vertex < 0) throw UsageError("truncate needs --p and --vertex");
                auto a = parse_polytope(pspec);
                p = geo::truncate_vertex(a, trunc_vertex);
                expected = star_clique(geo::skeleton_graph(a), trunc_vertex);
            } else if (what == "steinitz") {
                Graph g = parse_graph_tokens(params);
                p = geo::steinitz_realization(g);
                expected = g;
            } else {
                std::vector<int> ints;
                for (const auto& s : params) ints.push_back(to_int(s));
                p = geo::named_polytope(what, ints);
            }
            if (static_cast<std::size_t>(p.vertex_count()) > c.hull_cap)
                throw UsageError("polytope has " + std::to_string(p.vertex_count()) + " vertices, above --hull-cap");
            Graph sk = geo::skeleton_graph(p);
            json j{{"polytope", geo::polytope_to_json(p)}, {"skeleton", graph_block(sk)}};
            auto lat = geo::face_lattice(p);
            j["f_vector"] = lat.f_vector();
            if (expected) {
                auto m = geo::verify_graph(p, *expected);
                j["expected"] = graph_block(*expected);
                j["verified"] = m.bijection.has_value();
                if (m.bijection) j["bijection"] = *m.bijection;
                else j["mismatch"] = m.mismatch;
            }
            if (want_lattice) j["lattice"] = geo::lattice_to_json(lat);
            if (want_schlegel) j["schlegel"] = geo::schlegel_coordinates(p);
            emit(j.dump(2) + "\n", c.out, out);
            return kOk;
        }
        if (*verify) {
            auto p = parse_polytope(poly_path);
            Graph g = parse_graph_tokens(graph_tokens);
            auto m = geo::verify_graph(p, g);
            json j{{"polytope", geo::polytope_hash(p)}, {"graph", to_graph6(g)}, {"match", m.bijection.has_value()}};
            if (m.bijection) j["bijection"] = *m.bijection;
            else j["mismatch"] = m.mismatch;
            emit(j.dump(2) + "\n", c.out, out);
            return m.bijection ? kOk : kFound;
        }
        if (*replay) {
            std::vector<std::pair<std::string, std::vector<std::string>>> items;
            auto lines = read_lines(transcript_path);
            json whole;
            bool is_report = false;
            if (!lines.empty() && lines[0].find("\"event\"") == std::string::npos) {
                std::ifstream in(transcript_path);
                whole = json::parse(in, nullptr, false);
                is_report = !whole.is_discarded() && !whole.is_array() && whole.is_object();
            }
            if (is_report) collect_transcripts(whole, "", items);
            else items.push_back({transcript_path, lines});
            if (items.empty()) throw UsageError("no transcript found in " + transcript_path);
            json rs = json::array();
            bool all = true;
            for (const auto& [at, ls] : items) {
                Graph g;
                if (!graph_tokens.empty()) {
                    g = parse_graph_tokens(graph_tokens);
                } else {
                    auto h = json::parse(ls.at(0), nullptr, false);
                    if (h.is_discarded() || !h.contains("graph")) throw UsageError("transcript header has no graph; pass the graph");
                    g = parse_graph6(h["graph"].get<std::string>());
                }
                auto r = simple::replay_transcript(g, ls);
                all = all && r.valid;
                rs.push_back({{"at", at}, {"valid", r.valid}, {"claimed", simple::outcome_name(r.claimed)},
                              {"hash", simple::hash_lines(ls)}, {"message", r.message}});
            }
            emit(json{{"valid", all}, {"transcripts", rs}}.dump(2) + "\n", c.out, out);
            return all ? kOk : kFound;
        }
        if (*table) {
            auto t = circulant_table(max_n, c.range_budget());
            if (c.format == "graph6") throw UsageError("table emits json or md");
            emit(c.format == "md" ? table_md(t) : t.dump(2) + "\n", c.out, out);
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "polygraph: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "polygraph: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        err << "polygraph: bad JSON input: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace polygraph::cli
