#include "mcd/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "mcd/invariants.hpp"
#include "mcd/parallel.hpp"
#include "mcd/rng.hpp"
#include "mcd/structure.hpp"

namespace mcd {

using nlohmann::json;

NRange parse_n_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        NRange r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
        if (r.lo > r.hi) throw std::invalid_argument("");
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad n range '" + text + "', expected A..B or N");
    }
}

Graph parse_pattern(const std::string& text) {
    if (text == "HM" || text == "mobius" || text == "mobius_ladder") return mobius_ladder();
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (text.size() >= 2 && (text[0] == 'C' || text[0] == 'K' || text[0] == 'P')) {
        std::string rest = text.substr(1);
        auto comma = rest.find(',');
        if (text[0] == 'K' && comma != std::string::npos) {
            std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
            if (all_digits(a) && all_digits(b)) return complete_bipartite(std::stoi(a), std::stoi(b));
        } else if (all_digits(rest)) {
            if (text[0] == 'C') return cycle_graph(std::stoi(rest));
            if (text[0] == 'K') return complete_graph(std::stoi(rest));
            return path_graph(std::stoi(rest));
        }
    }
    return named_graph(text);
}

namespace {

std::vector<int> parse_size_list(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("bad size list '" + text + "', expected [s1,s2,...]");
    std::vector<int> sizes;
    std::string inner = text.substr(1, text.size() - 2);
    std::istringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            sizes.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad size '" + tok + "' in " + text);
        }
    }
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    return sizes;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<CorpusItem> read_g6_stream(std::istream& in) {
    std::vector<CorpusItem> items;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        CorpusItem item;
        item.graph = Graph::from_graph6(line);
        item.provenance = CorpusItem::Provenance::named;
        item.index = int(items.size());
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<CorpusItem> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    // an edge-list file starts with an "n m" header; graph6 lines have no spaces
    std::string first;
    std::streampos at = in.tellg();
    while (std::getline(in, first)) {
        if (first.find_first_not_of(" \t\r") == std::string::npos || first[0] == '#') {
            at = in.tellg();
            continue;
        }
        break;
    }
    in.clear();
    in.seekg(0);
    if (first.find_first_of(" \t") != std::string::npos) {
        CorpusItem item;
        item.graph = read_edge_list(in);
        item.provenance = CorpusItem::Provenance::named;
        return {std::move(item)};
    }
    return read_g6_stream(in);
}

CorpusItem single(Graph g, CorpusItem::Provenance prov) {
    CorpusItem item;
    item.graph = std::move(g);
    item.provenance = prov;
    return item;
}

} // namespace

Corpus make_input_source(const std::string& input) {
    Corpus c;
    c.description = input;
    if (input == "-") {
        c.items = read_g6_stream(std::cin);
        return c;
    }
    auto head = input.substr(0, input.find(':'));
    if (head == "named") {
        c.items = {single(named_graph(input.substr(6)), CorpusItem::Provenance::named)};
    } else if (head == "g6") {
        c.items = {single(Graph::from_graph6(input.substr(3)), CorpusItem::Provenance::named)};
    } else if (head == "blowup") {
        auto parts = split(input, ':');
        if (parts.size() != 3) throw std::invalid_argument("expected blowup:PATTERN:[sizes]");
        c.items = {single(blow_up({parse_pattern(parts[1]), parse_size_list(parts[2])}).graph,
                          CorpusItem::Provenance::blowup)};
    } else if (head == "balanced") {
        auto parts = split(input, ':');
        if (parts.size() != 3) throw std::invalid_argument("expected balanced:PATTERN:N");
        c.items = {single(balanced_blow_up(parse_pattern(parts[1]), std::stoi(parts[2])).graph,
                          CorpusItem::Provenance::blowup)};
    } else {
        c.items = read_graph_file(input);
    }
    for (std::size_t i = 0; i < c.items.size(); ++i) c.items[i].index = int(i);
    return c;
}

Corpus make_corpus(const std::string& spec, const NRange& range, const RunOptions& opt) {
    Corpus c;
    if (spec == "enumerated" || spec == "all") {
        bool tf = spec == "enumerated";
        c.description = (tf ? "enumerated triangle-free n=" : "enumerated all graphs n=") +
                        std::to_string(range.lo) + ".." + std::to_string(range.hi);
        for (int n = range.lo; n <= range.hi; ++n) {
            auto level = tf ? enumerate_triangle_free(n) : enumerate_all_graphs(n);
            for (auto& item : level) {
                item.index = int(c.items.size());
                c.items.push_back(std::move(item));
            }
        }
        return c;
    }
    if (spec == "random" || spec == "maximal") {
        c.description = spec + " count=" + std::to_string(opt.count) +
                        " seed=" + std::to_string(opt.seed) + " n=" + std::to_string(range.lo) +
                        ".." + std::to_string(range.hi);
        std::seed_seq seq{std::uint32_t(opt.seed), std::uint32_t(opt.seed >> 32)};
        std::mt19937 rng(seq);
        for (int i = 0; i < opt.count; ++i) {
            int n = range.lo + int(uniform_below(rng, std::uint32_t(range.hi - range.lo + 1)));
            double p = opt.p >= 0.0 ? opt.p : uniform_unit(rng);
            std::uint64_t gseed = derive_seed(opt.seed, std::uint64_t(i));
            Graph g = random_triangle_free(n, p, gseed);
            if (spec == "maximal") g = complete_to_maximal_triangle_free(g, gseed + 1);
            CorpusItem item = single(std::move(g), CorpusItem::Provenance::random);
            item.seed = gseed;
            item.index = i;
            c.items.push_back(std::move(item));
        }
        return c;
    }
    if (spec.rfind("file:", 0) == 0) {
        c.description = spec;
        c.items = read_graph_file(spec.substr(5));
        for (std::size_t i = 0; i < c.items.size(); ++i) c.items[i].index = int(i);
        return c;
    }
    throw std::invalid_argument("unknown corpus '" + spec +
                                "' (expected enumerated | all | random | maximal | file:PATH)");
}

// ---- per-graph analysis ----

namespace {

json analyze_graph(const Graph& g) {
    const int n = g.vertex_count();
    json r;
    r["graph6"] = g.to_graph6();
    r["n"] = n;
    r["e"] = g.edge_count();

    json adj = json::array();
    for (int v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
    r["adjacency"] = adj;

    r["min_degree"] = n >= 1 ? json(min_degree(g)) : json(nullptr);
    if (n >= 2) {
        auto d2 = min_common_degree(g);
        r["delta2"] = d2.is_infinite() ? json("infinite") : json(d2.value());
    } else {
        r["delta2"] = nullptr;
    }

    auto tf = is_triangle_free(g);
    r["triangle_free"] = tf.triangle_free;
    if (!tf.triangle_free)
        r["triangle"] = std::vector<VertexId>(tf.witness.begin(), tf.witness.end());

    auto cyc = shortest_odd_cycle(g);
    r["odd_girth"] = cyc ? json(cyc->size()) : json(nullptr);
    if (cyc) r["odd_cycle"] = *cyc;
    r["bipartite"] = !cyc.has_value();

    auto c5 = is_c5_free(g);
    r["c5_free"] = c5.c5_free;
    if (!c5.c5_free) r["c5_witness"] = std::vector<VertexId>(c5.witness.begin(), c5.witness.end());

    if (tf.triangle_free) {
        auto maxtf = is_maximal_triangle_free(g);
        r["maximal_triangle_free"] = maxtf.maximal;
        if (!maxtf.maximal)
            r["addable_non_edge"] = std::vector<VertexId>{maxtf.addable.first, maxtf.addable.second};
    } else {
        r["maximal_triangle_free"] = nullptr;
    }

    json hom;
    if (!tf.triangle_free) {
        // a triangle cannot map into a triangle-free target
        hom["found"] = false;
        hom["route"] = "none";
        hom["note"] = "triangle rules out any map to C5";
    } else {
        auto res = construct_c5_homomorphism(g);
        if (res.kind != C5HomResult::Kind::failure) {
            hom["found"] = true;
            hom["route"] = res.kind == C5HomResult::Kind::bipartite_map ? "bipartite" : "c5-blocks";
            hom["map"] = res.map;
        } else {
            hom["construction_failure"] = res.failure;
            auto oracle = find_homomorphism(g, cycle_graph(5));
            hom["found"] = oracle.has_value();
            hom["route"] = oracle ? "oracle" : "none";
            if (oracle) hom["map"] = *oracle;
        }
    }
    r["hom_c5"] = hom;

    auto rec = recognize_blow_up(g);
    r["blowup"] = {{"pattern_graph6", rec.spec.pattern.to_graph6()}, {"sizes", rec.spec.sizes}};
    return r;
}

json report_skeleton(const std::string& command, json arguments) {
    json doc;
    doc["schema"] = kReportSchema;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["arguments"] = std::move(arguments);
    return doc;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     start)
            .count();
    }
};

} // namespace

Report run_analyze(const std::string& input, const RunOptions& opt) {
    Timer timer;
    set_jobs(opt.jobs);
    Corpus corpus = make_input_source(input);

    std::vector<json> records(corpus.items.size());
    parallel_for_index(corpus.items.size(), [&](std::size_t i) {
        records[i] = analyze_graph(corpus.items[i].graph);
    });

    Report out;
    out.doc = report_skeleton("analyze", {{"input", input}, {"jobs", opt.jobs}});
    out.doc["records"] = records;
    out.doc["aggregate"] = {{"graphs", corpus.items.size()}};
    out.doc["wall_time_ms"] = timer.ms();
    return out;
}

// ---- verify ----

namespace {

using CheckFn = std::function<TheoremVerdict(const Graph&)>;

TheoremVerdict equality_case_verdict(const Graph& g) {
    TheoremVerdict v;
    v.statement = "equality-case";
    auto tf = is_triangle_free(g);
    if (!tf.triangle_free) {
        v.detail["skipped"] = "input has a triangle";
        return v;
    }
    auto eq = check_equality_case(g);
    v.hypothesis = eq.kind != EqualityCase::none;
    v.conclusion = eq.structure_confirmed;
    v.detail["case"] = eq.kind == EqualityCase::none        ? "none"
                       : eq.kind == EqualityCase::balanced_c5 ? "balanced-c5"
                                                              : "balanced-mobius";
    v.detail["note"] = eq.detail;
    return v;
}

} // namespace

std::vector<std::string> verify_theorem_ids() {
    return {"delta2-bipartite", "delta2-c5hom",      "c5free-bipartite", "maximal-delta2",
            "odd-girth",        "c3c5free-bipartite", "mobius-bound",     "disjoint-d",
            "equality-case"};
}

Report run_verify(const std::string& theorem, const std::string& corpus_spec, const NRange& range,
                  const RunOptions& opt) {
    Timer timer;
    set_jobs(opt.jobs);

    std::vector<std::pair<std::string, CheckFn>> checks;
    if (theorem == "delta2-bipartite") {
        checks.emplace_back(theorem, check_bipartite_theorem);
    } else if (theorem == "delta2-c5hom") {
        checks.emplace_back(theorem, check_c5_hom_theorem);
    } else if (theorem == "c5free-bipartite") {
        checks.emplace_back(theorem, check_c5free_theorem);
    } else if (theorem == "odd-girth") {
        checks.emplace_back(theorem, check_odd_girth_lemma);
    } else if (theorem == "c3c5free-bipartite") {
        checks.emplace_back(theorem, check_c3c5free_corollary);
    } else if (theorem == "mobius-bound") {
        checks.emplace_back(theorem, check_mobius_bound_lemma);
    } else if (theorem == "disjoint-d") {
        checks.emplace_back(theorem, check_d_structure);
    } else if (theorem == "equality-case") {
        checks.emplace_back(theorem, equality_case_verdict);
    } else if (theorem == "maximal-delta2") {
        for (auto [num, den] : opt.alphas) {
            std::string id = "maximal-delta2 alpha=" + std::to_string(num) + "/" + std::to_string(den);
            checks.emplace_back(id, [num, den](const Graph& g) {
                return check_lemma_min_degree_implies_delta2(g, num, den);
            });
        }
    } else {
        throw std::invalid_argument("unknown theorem '" + theorem + "'");
    }

    Corpus corpus = make_corpus(corpus_spec, range, opt);

    struct Row {
        json record;
        bool hyp = false;
        bool violation = false;
    };
    std::vector<Row> rows(corpus.items.size());
    parallel_for_index(corpus.items.size(), [&](std::size_t i) {
        const Graph& g = corpus.items[i].graph;
        json rec;
        rec["graph6"] = g.to_graph6();
        rec["n"] = g.vertex_count();
        json verdicts = json::array();
        for (const auto& [id, fn] : checks) {
            TheoremVerdict v = fn(g);
            json jv;
            jv["statement"] = id;
            jv["hypothesis"] = v.hypothesis;
            jv["conclusion"] = v.conclusion;
            jv["violation"] = v.violation();
            jv["detail"] = v.detail;   // invariant values and witnesses
            rows[i].hyp = rows[i].hyp || v.hypothesis;
            rows[i].violation = rows[i].violation || v.violation();
            verdicts.push_back(std::move(jv));
        }
        rec["verdicts"] = std::move(verdicts);
        rec["violation"] = rows[i].violation;
        rows[i].record = std::move(rec);
    });

    long long hyp_count = 0, violations = 0;
    json records = json::array();
    for (auto& row : rows) {
        hyp_count += row.hyp;
        violations += row.violation;
        records.push_back(std::move(row.record));
    }

    Report out;
    json args{{"theorem", theorem}, {"corpus", corpus.description},
              {"n", std::to_string(range.lo) + ".." + std::to_string(range.hi)},
              {"seed", opt.seed},   {"jobs", opt.jobs}};
    if (theorem == "maximal-delta2") {
        json as = json::array();
        for (auto [num, den] : opt.alphas) as.push_back(std::to_string(num) + "/" + std::to_string(den));
        args["alphas"] = as;
    }
    out.doc = report_skeleton("verify", args);
    out.doc["records"] = std::move(records);
    out.doc["aggregate"] = {{"graphs", corpus.items.size()},
                            {"hypothesis_satisfying", hyp_count},
                            {"violations", violations}};
    out.doc["wall_time_ms"] = timer.ms();
    out.violations = violations;
    return out;
}

// ---- search ----

namespace {

struct Atom {
    enum class Kind { boolean, compare } kind = Kind::boolean;
    std::string name;
    bool negated = false;
    std::string op;              // compare
    long long literal = 0;       // rhs integer
    bool rhs_is_n = false;       // rhs "n"
    long long rhs_divisor = 1;   // rhs "n/k" -> floor(n/k)
};

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Atom parse_atom(const std::string& raw) {
    static const char* ops[] = {"<=", ">=", "!=", "==", "=", "<", ">"};
    Atom atom;
    std::string text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty predicate term");
    for (const char* op : ops) {
        auto at = text.find(op);
        if (at == std::string::npos) continue;
        atom.kind = Atom::Kind::compare;
        atom.name = trim(text.substr(0, at));
        atom.op = op;
        std::string rhs = trim(text.substr(at + std::string(op).size()));
        if (rhs == "n") {
            atom.rhs_is_n = true;
        } else if (rhs.rfind("n/", 0) == 0) {
            atom.rhs_is_n = true;
            atom.rhs_divisor = std::stoll(rhs.substr(2));
            if (atom.rhs_divisor <= 0) throw std::invalid_argument("bad divisor in '" + raw + "'");
        } else {
            try {
                atom.literal = std::stoll(rhs);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad right-hand side '" + rhs + "'");
            }
        }
        static const std::vector<std::string> numeric{"n", "e", "delta", "delta2", "oddgirth"};
        if (std::find(numeric.begin(), numeric.end(), atom.name) == numeric.end())
            throw std::invalid_argument("unknown numeric invariant '" + atom.name + "'");
        return atom;
    }
    if (text[0] == '!') {
        atom.negated = true;
        text = trim(text.substr(1));
    }
    static const std::vector<std::pair<std::string, std::string>> aliases{
        {"triangle-free", "triangle-free"}, {"trianglefree", "triangle-free"},
        {"bipartite", "bipartite"},         {"c5-free", "c5-free"},
        {"c5free", "c5-free"},              {"maximal-triangle-free", "maximal"},
        {"maximal", "maximal"},             {"hom-c5", "hom-c5"},
        {"homc5", "hom-c5"}};
    for (const auto& [alias, canonical] : aliases)
        if (text == alias) {
            atom.name = canonical;
            return atom;
        }
    throw std::invalid_argument("unknown predicate term '" + raw + "'");
}

std::vector<Atom> parse_predicate(const std::string& text) {
    std::string normalized;
    for (std::size_t i = 0; i < text.size();) {
        // accept the unicode conjunction and negation spellings too
        if (text.compare(i, 3, "∧") == 0) { normalized += '&'; i += 3; }
        else if (text.compare(i, 2, "¬") == 0) { normalized += '!'; i += 2; }
        else { normalized += text[i]; ++i; }
    }
    std::vector<Atom> atoms;
    std::size_t start = 0;
    while (start <= normalized.size()) {
        auto amp = normalized.find('&', start);
        std::string term = normalized.substr(start, amp == std::string::npos ? std::string::npos : amp - start);
        if (!trim(term).empty()) atoms.push_back(parse_atom(term));
        if (amp == std::string::npos) break;
        start = amp + 1;
        while (start < normalized.size() && normalized[start] == '&') ++start;
    }
    if (atoms.empty()) throw std::invalid_argument("empty predicate");
    return atoms;
}

bool compare_value(long long lhs, const std::string& op, long long rhs) {
    if (op == "=" || op == "==") return lhs == rhs;
    if (op == "!=") return lhs != rhs;
    if (op == "<") return lhs < rhs;
    if (op == "<=") return lhs <= rhs;
    if (op == ">") return lhs > rhs;
    return lhs >= rhs;
}

bool eval_atom(const Atom& atom, const Graph& g) {
    const int n = g.vertex_count();
    if (atom.kind == Atom::Kind::boolean) {
        bool value = false;
        if (atom.name == "triangle-free") {
            value = is_triangle_free(g).triangle_free;
        } else if (atom.name == "bipartite") {
            value = is_bipartite(g).bipartite;
        } else if (atom.name == "c5-free") {
            value = is_c5_free(g).c5_free;
        } else if (atom.name == "maximal") {
            value = is_triangle_free(g).triangle_free && is_maximal_triangle_free(g).maximal;
        } else {   // hom-c5
            if (!is_triangle_free(g).triangle_free) {
                value = false;
            } else {
                auto res = construct_c5_homomorphism(g);
                value = res.kind != C5HomResult::Kind::failure ||
                        find_homomorphism(g, cycle_graph(5)).has_value();
            }
        }
        return atom.negated ? !value : value;
    }
    long long rhs = atom.rhs_is_n ? n / atom.rhs_divisor : atom.literal;
    if (atom.name == "n") return compare_value(n, atom.op, rhs);
    if (atom.name == "e") return compare_value(g.edge_count(), atom.op, rhs);
    if (atom.name == "delta") {
        if (n == 0) return false;
        return compare_value(min_degree(g), atom.op, rhs);
    }
    if (atom.name == "delta2") {
        if (n < 2) return false;
        auto d2 = min_common_degree(g);
        if (d2.is_infinite()) return atom.op == ">" || atom.op == ">=" || atom.op == "!=";
        return compare_value(d2.value(), atom.op, rhs);
    }
    // oddgirth: comparisons are false on bipartite graphs
    auto cyc = shortest_odd_cycle(g);
    if (!cyc) return false;
    return compare_value((long long)cyc->size(), atom.op, rhs);
}

} // namespace

Report run_search(const std::string& predicate, const std::string& corpus_spec, const NRange& range,
                  const RunOptions& opt) {
    Timer timer;
    set_jobs(opt.jobs);
    auto atoms = parse_predicate(predicate);

    Corpus corpus = make_corpus(corpus_spec, range, opt);
    std::size_t scan = corpus.items.size();
    bool budget_exhausted = false;
    if (opt.budget >= 0 && std::size_t(opt.budget) < scan) {
        scan = std::size_t(opt.budget);
        budget_exhausted = true;
    }

    std::vector<char> match(scan, 0);
    std::vector<json> analyzed(scan);
    parallel_for_index(scan, [&](std::size_t i) {
        const Graph& g = corpus.items[i].graph;
        bool ok = true;
        for (const Atom& atom : atoms)
            if (!eval_atom(atom, g)) { ok = false; break; }
        match[i] = ok;
        if (ok) analyzed[i] = analyze_graph(g);
    });

    json records = json::array();
    long long matches = 0;
    for (std::size_t i = 0; i < scan; ++i)
        if (match[i]) {
            ++matches;
            records.push_back(std::move(analyzed[i]));
        }

    Report out;
    out.doc = report_skeleton("search", {{"predicate", predicate},
                                         {"corpus", corpus.description},
                                         {"n", std::to_string(range.lo) + ".." + std::to_string(range.hi)},
                                         {"budget", opt.budget},
                                         {"seed", opt.seed},
                                         {"jobs", opt.jobs}});
    out.doc["records"] = std::move(records);
    out.doc["aggregate"] = {{"graphs_scanned", scan},
                            {"matches", matches},
                            {"budget_exhausted", budget_exhausted}};
    out.doc["wall_time_ms"] = timer.ms();
    return out;
}

// ---- generate ----

long long run_generate(const std::string& family, std::ostream& out, const RunOptions&) {
    auto parts = split(family, ':');
    if (parts.empty()) throw std::invalid_argument("empty family spec");
    const std::string& kind = parts[0];

    auto emit = [&out](const Graph& g) { out << g.to_graph6() << '\n'; };

    if (kind == "named") {
        if (parts.size() != 2) throw std::invalid_argument("expected named:EXPR");
        emit(named_graph(parts[1]));
        return 1;
    }
    if (kind == "blowup") {
        if (parts.size() != 3) throw std::invalid_argument("expected blowup:PATTERN:[sizes]");
        emit(blow_up({parse_pattern(parts[1]), parse_size_list(parts[2])}).graph);
        return 1;
    }
    if (kind == "balanced") {
        if (parts.size() != 3) throw std::invalid_argument("expected balanced:PATTERN:N");
        emit(balanced_blow_up(parse_pattern(parts[1]), std::stoi(parts[2])).graph);
        return 1;
    }
    if (kind == "enum") {
        if (parts.size() != 3 || (parts[1] != "trianglefree" && parts[1] != "all"))
            throw std::invalid_argument("expected enum:trianglefree:RANGE or enum:all:RANGE");
        NRange range = parse_n_range(parts[2]);
        long long count = 0;
        for (int n = range.lo; n <= range.hi; ++n) {
            auto items = parts[1] == "trianglefree" ? enumerate_triangle_free(n) : enumerate_all_graphs(n);
            for (const auto& item : items) {
                emit(item.graph);
                ++count;
            }
        }
        return count;
    }
    if (kind == "random" || kind == "maximal") {
        // random:N:P:SEED[:COUNT]
        if (parts.size() != 4 && parts.size() != 5)
            throw std::invalid_argument("expected " + kind + ":N:P:SEED[:COUNT]");
        int n = std::stoi(parts[1]);
        double p = std::stod(parts[2]);
        std::uint64_t seed = std::stoull(parts[3]);
        long long count = parts.size() == 5 ? std::stoll(parts[4]) : 1;
        for (long long i = 0; i < count; ++i) {
            std::uint64_t gseed = count == 1 ? seed : derive_seed(seed, std::uint64_t(i));
            Graph g = random_triangle_free(n, p, gseed);
            if (kind == "maximal") g = complete_to_maximal_triangle_free(g, gseed + 1);
            emit(g);
        }
        return count;
    }
    throw std::invalid_argument("unknown family '" + kind + "'");
}

// ---- rendering ----

std::string render_report(const Report& report, const std::string& format) {
    if (format == "json") return report.doc.dump(2) + "\n";
    if (format != "text") throw std::invalid_argument("unknown format '" + format + "'");

    const json& doc = report.doc;
    std::ostringstream out;
    out << "# " << kToolName << ' ' << doc["command"].get<std::string>() << '\n';
    for (const auto& [key, value] : doc["arguments"].items())
        out << "#   " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
    const std::string command = doc["command"].get<std::string>();
    for (const auto& rec : doc["records"]) {
        if (command == "verify") {
            out << rec["graph6"].get<std::string>() << "  n=" << rec["n"].dump();
            for (const auto& v : rec["verdicts"])
                out << "  [" << v["statement"].get<std::string>()
                    << " hyp=" << (v["hypothesis"].get<bool>() ? 1 : 0)
                    << " concl=" << (v["conclusion"].get<bool>() ? 1 : 0)
                    << (v["violation"].get<bool>() ? " VIOLATION" : "") << "]";
            out << '\n';
        } else {
            out << rec["graph6"].get<std::string>() << "  n=" << rec["n"].dump() << " e=" << rec["e"].dump()
                << " delta=" << rec["min_degree"].dump() << " delta2=" << rec["delta2"].dump()
                << " triangle_free=" << rec["triangle_free"].dump()
                << " odd_girth=" << rec["odd_girth"].dump() << " bipartite=" << rec["bipartite"].dump()
                << " c5_free=" << rec["c5_free"].dump()
                << " hom_c5=" << rec["hom_c5"]["route"].get<std::string>() << '\n';
        }
    }
    out << "aggregate:";
    for (const auto& [key, value] : doc["aggregate"].items()) out << ' ' << key << '=' << value.dump();
    out << '\n';
    return out.str();
}

} // namespace mcd
