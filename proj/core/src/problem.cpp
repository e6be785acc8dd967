#include "ddpoly/problem.hpp"

#include "ddpoly/opparse.hpp"
#include "ddpoly/oracle.hpp"

#include <fstream>
#include <sstream>

namespace ddpoly {

namespace {

// ---------------------------------------------------------------------------
// problem file syntax: line-oriented key/value pairs with brace sections
//
//   key value-until-end-of-line
//   key {            # nested section
//     ...
//   }
//   # comment
// ---------------------------------------------------------------------------

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

struct Section {
    std::string name;
    int line = 0;
    std::vector<Entry> entries;
    std::vector<Section> children;

    const Entry* find(const std::string& key) const {
        for (const auto& e : entries) {
            if (e.key == key) return &e;
        }
        return nullptr;
    }
    std::vector<const Entry*> all(const std::string& key) const {
        std::vector<const Entry*> out;
        for (const auto& e : entries) {
            if (e.key == key) out.push_back(&e);
        }
        return out;
    }
    const Section* child(const std::string& name_) const {
        for (const auto& c : children) {
            if (c.name == name_) return &c;
        }
        return nullptr;
    }
};

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Braces are structural anywhere on a line (they cannot occur inside
// values); the text between them parses as ordinary "key rest-of-segment"
// entries, so single-line sections like "link { generator e1 }" work.
Section parse_sections(const std::string& content) {
    Section root;
    std::vector<Section*> stack{&root};
    std::istringstream in(content);
    std::string raw;
    int lineno = 0;

    auto entry_of = [&stack](const std::string& segment, int line) {
        size_t sp = segment.find_first_of(" \t");
        std::string key =
            sp == std::string::npos ? segment : segment.substr(0, sp);
        std::string rest =
            sp == std::string::npos ? "" : strip(segment.substr(sp + 1));
        stack.back()->entries.push_back(Entry{key, rest, line});
    };
    auto open_section = [&stack](const std::string& header, int line) {
        if (header.empty()) {
            throw ParseError("section name expected before '{'", line, 1);
        }
        size_t sp = header.find_first_of(" \t");
        std::string name =
            sp == std::string::npos ? header : header.substr(0, sp);
        std::string qualifier =
            sp == std::string::npos ? "" : strip(header.substr(sp + 1));
        stack.back()->children.push_back(Section{name, line, {}, {}});
        stack.push_back(&stack.back()->children.back());
        if (!qualifier.empty()) {
            stack.back()->entries.push_back(Entry{"kind", qualifier, line});
        }
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string pending;
        for (char c : line) {
            if (c == '{') {
                open_section(strip(pending), lineno);
                pending.clear();
            } else if (c == '}') {
                std::string seg = strip(pending);
                if (!seg.empty()) entry_of(seg, lineno);
                pending.clear();
                if (stack.size() == 1) {
                    throw ParseError("unmatched '}'", lineno, 1);
                }
                stack.pop_back();
            } else {
                pending += c;
            }
        }
        std::string seg = strip(pending);
        if (!seg.empty()) entry_of(seg, lineno);
    }
    if (stack.size() != 1) {
        throw ParseError("unterminated section '" + stack.back()->name + "'",
                         stack.back()->line, 1);
    }
    return root;
}

int parse_int(const Entry& e) {
    try {
        size_t used = 0;
        int v = std::stoi(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument(e.value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("integer expected for '" + e.key + "'", e.line, 1);
    }
}

bool parse_bool(const Entry& e) {
    if (e.value == "true" || e.value == "yes" || e.value == "on") return true;
    if (e.value == "false" || e.value == "no" || e.value == "off") return false;
    throw ParseError("boolean expected for '" + e.key + "'", e.line, 1);
}

std::vector<int> parse_int_list(const Entry& e) {
    std::istringstream in(e.value);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("integer list expected for '" + e.key + "'",
                             e.line, 1);
        }
    }
    return out;
}

Rational parse_rational(const std::string& text, int line) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        return Rational(Integer(text.substr(0, slash)),
                        Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("rational expected, got '" + text + "'", line, 1);
    }
}

// ---------------------------------------------------------------------------
// spec construction
// ---------------------------------------------------------------------------

Signature build_signature(const Section& root) {
    const Section* sig = root.child("signature");
    if (!sig) {
        throw Error("ValidationError", "missing 'signature' section");
    }
    int m = 0, n = 0;
    bool inv = false;
    if (const Entry* e = sig->find("derivations")) m = parse_int(*e);
    if (const Entry* e = sig->find("translations")) n = parse_int(*e);
    if (const Entry* e = sig->find("inversive")) inv = parse_bool(*e);
    return Signature(m, n, inv);
}

FieldPtr build_field(const Section& root, const Signature& sig) {
    const Section* gf = root.child("ground_field");
    if (!gf) return GroundField::constants(sig);

    std::vector<std::string> vars;
    if (const Entry* e = gf->find("indeterminates")) {
        std::istringstream in(e->value);
        std::string name;
        while (in >> name) {
            if (name.size() >= 2 &&
                (name[0] == 'd' || name[0] == 'a' || name[0] == 'e')) {
                bool digits = true;
                for (size_t i = 1; i < name.size(); ++i) {
                    digits = digits && std::isdigit(
                                           static_cast<unsigned char>(name[i]));
                }
                if (digits) {
                    throw ParseError("indeterminate '" + name +
                                         "' collides with an operator marker",
                                     e->line, 1);
                }
            }
            vars.push_back(name);
        }
    }
    auto var_of = [&vars](const std::string& name, int line) {
        for (size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == name) return static_cast<int>(i);
        }
        throw ParseError("unknown indeterminate '" + name + "'", line, 1);
    };

    std::vector<DerivationAction> deltas(sig.derivations, DerivationAction{});
    std::vector<TranslationAction> alphas(sig.translations, TranslationAction{});
    for (const Entry* e : gf->all("delta")) {
        std::istringstream in(e->value);
        std::string which, what, target;
        in >> which >> what;
        if (which.size() < 2 || which[0] != 'd') {
            throw ParseError("expected 'delta d<k> ...'", e->line, 1);
        }
        int idx = std::stoi(which.substr(1)) - 1;
        if (idx < 0 || idx >= sig.derivations) {
            throw ParseError("derivation index out of range", e->line, 1);
        }
        if (what == "zero") {
            deltas[idx] = DerivationAction{};
        } else if (what.rfind("d/d", 0) == 0) {
            deltas[idx] = DerivationAction{var_of(what.substr(3), e->line)};
        } else {
            throw ParseError("derivation action is 'd/d<var>' or 'zero'",
                             e->line, 1);
        }
    }
    for (const Entry* e : gf->all("alpha")) {
        std::istringstream in(e->value);
        std::string which, what;
        in >> which >> what;
        if (which.size() < 2 || which[0] != 'a') {
            throw ParseError("expected 'alpha a<k> ...'", e->line, 1);
        }
        int idx = std::stoi(which.substr(1)) - 1;
        if (idx < 0 || idx >= sig.translations) {
            throw ParseError("translation index out of range", e->line, 1);
        }
        if (what == "identity") {
            alphas[idx] = TranslationAction{};
        } else if (what == "shift") {
            std::string target;
            in >> target;
            alphas[idx] = TranslationAction{TranslationAction::Kind::shift,
                                            var_of(target, e->line)};
        } else if (what == "scale") {
            std::string target, factor;
            in >> target >> factor;
            alphas[idx] = TranslationAction{
                TranslationAction::Kind::scale, var_of(target, e->line),
                parse_rational(factor, e->line)};
        } else {
            throw ParseError(
                "translation action is 'shift <var>', 'scale <var> <c>' or "
                "'identity'",
                e->line, 1);
        }
    }
    return std::make_shared<GroundField>(sig, vars, deltas, alphas);
}

std::optional<PartitionSpec> build_partition(const Section& root,
                                             const Signature& sig) {
    const Section* p = root.child("partition");
    if (!p) return std::nullopt;
    std::vector<int> d, s;
    if (const Entry* e = p->find("delta")) d = parse_int_list(*e);
    if (const Entry* e = p->find("sigma")) s = parse_int_list(*e);
    return PartitionSpec(d, s, sig);
}

ExtensionPresentation build_extension(const Section& root, const FieldPtr& F) {
    const Section* ext = root.child("extension");
    if (!ext) {
        throw Error("ValidationError", "missing 'extension' section");
    }
    const Entry* g = ext->find("generators");
    int s = g ? parse_int(*g) : 1;
    std::vector<ModuleElement> rels;
    for (const Entry* e : ext->all("relation")) {
        rels.push_back(parse_element(e->value, F, s, e->line));
    }
    return ExtensionPresentation(F, s, rels);
}

std::vector<ModuleElement> parse_generators(const Section& sec,
                                            const FieldPtr& F, int rank,
                                            const char* key = "generator") {
    std::vector<ModuleElement> out;
    for (const Entry* e : sec.all(key)) {
        out.push_back(parse_element(e->value, F, rank, e->line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// task execution
// ---------------------------------------------------------------------------

struct Context {
    ExtensionPresentation extension;
    std::optional<PartitionSpec> partition;
    ReportOptions opts;
    bool partition_mode = false;
    bool strict_polynomial = false;
};

void require_oracle_match(const DimensionReport& rep) {
    if (rep.oracle.checked && !rep.oracle.match) {
        throw Error("OracleMismatch",
                    "staircase table disagrees with the enumeration oracle");
    }
}

std::optional<PartitionSpec> active_partition(const Context& ctx) {
    if (!ctx.partition_mode) return std::nullopt;
    return ctx.partition;
}

Json run_chi_extension(const Section&, Context& ctx, std::string& text) {
    DimensionReport rep =
        chi_extension(ctx.extension, active_partition(ctx), ctx.opts);
    require_oracle_match(rep);
    text = report_to_text(rep, "  ");
    return report_to_json(rep);
}

Json run_chi_intermediate(const Section& task, Context& ctx, std::string& text) {
    bool closed = false;
    if (const Entry* e = task.find("closed")) closed = parse_bool(*e);
    IntermediateFieldSpec F(
        parse_generators(task, ctx.extension.field, ctx.extension.generators),
        closed);
    DimensionReport rep =
        chi_intermediate(ctx.extension, F, active_partition(ctx), ctx.opts);
    require_oracle_match(rep);
    text = report_to_text(rep, "  ");
    return report_to_json(rep);
}

Json run_quasi_probe(const Section& task, Context& ctx, std::string& text) {
    const Entry* rm = task.find("r_max");
    int r_max = rm ? parse_int(*rm) : 12;
    bool strict = ctx.strict_polynomial;
    if (const Entry* e = task.find("require_polynomial")) {
        strict = strict || parse_bool(*e);
    }
    ProbeResult res = quasi_polynomial_probe(
        ctx.extension,
        parse_generators(task, ctx.extension.field, ctx.extension.generators),
        r_max);
    if (strict && !res.eventually_polynomial) {
        throw Error("NotEventuallyPolynomial",
                    "probe verdict requested as an error");
    }
    Json j;
    Json values = Json::array();
    for (const auto& v : res.values) values.push_back(integer_to_json(v));
    j["values"] = values;
    j["verdict"] = res.verdict;
    if (res.poly) {
        j["polynomial"] = poly_to_json(*res.poly);
        j["polynomial_text"] = res.poly->to_text();
    }
    std::ostringstream out;
    out << "  values r=0.." << r_max << ":";
    for (const auto& v : res.values) out << " " << to_string(v);
    out << "\n  verdict: " << res.verdict << "\n";
    if (res.poly) out << "  fit: " << res.poly->to_text() << "\n";
    text = out.str();
    return j;
}

Json run_chain_audit(const Section& task, Context& ctx, std::string& text) {
    ChainSpec chain{ctx.extension, {}};
    for (const auto& link : task.children) {
        if (link.name != "link") continue;
        chain.links.push_back(IntermediateFieldSpec(
            parse_generators(link, ctx.extension.field,
                             ctx.extension.generators),
            true));
    }
    if (chain.links.size() < 2) {
        throw Error("ValidationError", "a chain audit needs at least two links");
    }
    auto gaps = degree_gap_audit(chain, ctx.opts);
    Json arr = Json::array();
    std::ostringstream out;
    out << "  gaps:";
    for (const auto& [i, gap] : gaps) {
        arr.push_back(Json{{"link", i}, {"degree_gap", gap}});
        out << " (" << i << ":" << gap << ")";
    }
    out << "\n";
    text = out.str();
    return Json{{"gaps", arr}};
}

Json run_theorem5_chain(const Section& task, Context& ctx, std::string& text) {
    const Entry* caps = task.find("caps");
    if (!caps) throw Error("ValidationError", "theorem5_chain needs 'caps'");
    ChainSpec chain = theorem5_chain(ctx.extension, parse_int_list(*caps));
    auto gaps = degree_gap_audit(chain, ctx.opts);
    bool strict = true;
    Json arr = Json::array();
    for (const auto& [i, gap] : gaps) {
        arr.push_back(Json{{"link", i}, {"degree_gap", gap}});
        strict = strict && gap >= 0;
    }
    TermOrder ord = TermOrder::ord_graded();
    Json links = Json::array();
    for (const auto& link : chain.links) {
        Json gens = Json::array();
        for (const auto& z : link.differentials) gens.push_back(z.to_text(ord));
        links.push_back(gens);
    }
    std::ostringstream out;
    out << "  links: " << chain.links.size() << "\n  gaps:";
    for (const auto& [i, gap] : gaps) out << " (" << i << ":" << gap << ")";
    out << "\n  strict_descent: " << (strict ? "true" : "false") << "\n";
    text = out.str();
    return Json{{"links", links}, {"gaps", arr}, {"strict_descent", strict}};
}

Json run_dim_bound(const Section& task, Context& ctx, std::string& text) {
    const Entry* k = task.find("k");
    if (!k) throw Error("ValidationError", "dim_bound needs 'k'");
    DimBoundReport rep = dim_bound_report(ctx.extension, parse_int(*k), ctx.opts);
    Json tops = Json::array(), drops = Json::array();
    for (const auto& v : rep.top_coeffs) tops.push_back(integer_to_json(v));
    for (const auto& v : rep.drops) drops.push_back(integer_to_json(v));
    std::ostringstream out;
    out << "  type_lower_bound: " << rep.type_lower_bound
        << "\n  dim: " << rep.dim << "\n  top_coefficients:";
    for (const auto& v : rep.top_coeffs) out << " " << to_string(v);
    out << "\n";
    text = out.str();
    return Json{{"type_lower_bound", rep.type_lower_bound},
                {"dim", rep.dim},
                {"top_coefficients", tops},
                {"drops", drops}};
}

Json run_compare_generators(const Section& task, Context& ctx,
                            std::string& text) {
    const Section* other = task.child("other");
    if (!other) {
        throw Error("ValidationError", "compare_generators needs 'other'");
    }
    const Entry* g = other->find("generators");
    int s2 = g ? parse_int(*g) : ctx.extension.generators;
    std::vector<ModuleElement> rels2;
    for (const Entry* e : other->all("relation")) {
        rels2.push_back(parse_element(e->value, ctx.extension.field, s2, e->line));
    }
    ExtensionPresentation X2(ctx.extension.field, s2, rels2);

    std::vector<ModuleElement> fwd =
        parse_generators(task, ctx.extension.field, ctx.extension.generators,
                         "forward");
    std::vector<ModuleElement> bwd =
        parse_generators(task, X2.field, s2, "backward");

    std::vector<ModuleElement> fdiffs = parse_generators(
        task, ctx.extension.field, ctx.extension.generators, "generator");
    IntermediateFieldSpec F =
        fdiffs.empty()
            ? IntermediateFieldSpec(
                  [&] {
                      std::vector<ModuleElement> units;
                      for (int c = 0; c < ctx.extension.generators; ++c) {
                          units.push_back(ModuleElement::basis(
                              ctx.extension.field, ctx.extension.generators, c));
                      }
                      return units;
                  }(),
                  true)
            : IntermediateFieldSpec(fdiffs, true);

    std::vector<ModuleElement> odiffs =
        parse_generators(task, X2.field, s2, "other_generator");
    IntermediateFieldSpec F2 =
        odiffs.empty() ? IntermediateFieldSpec(
                             [&] {
                                 std::vector<ModuleElement> moved;
                                 for (const auto& z : F.differentials) {
                                     moved.push_back(transform_through(z, bwd));
                                 }
                                 return moved;
                             }(),
                             true)
                       : IntermediateFieldSpec(odiffs, true);

    CompareOutcome out =
        compare_generator_sets(ctx.extension, X2, fwd, bwd, F, F2, ctx.opts);
    require_oracle_match(out.first);
    require_oracle_match(out.second);
    std::ostringstream t;
    t << "  first:\n" << report_to_text(out.first, "    ");
    t << "  second:\n" << report_to_text(out.second, "    ");
    t << "  invariants_equal: " << (out.invariants_equal ? "true" : "false")
      << "\n";
    text = t.str();
    return Json{{"first", report_to_json(out.first)},
                {"second", report_to_json(out.second)},
                {"invariants_equal", out.invariants_equal}};
}

}  // namespace

RunResult run_problem_text(const std::string& content,
                           const std::string& source_name,
                           const RunFlags& flags) {
    Section root = parse_sections(content);

    Signature sig = build_signature(root);
    FieldPtr F = build_field(root, sig);
    std::optional<PartitionSpec> part = build_partition(root, sig);

    Context ctx{build_extension(root, F), part, ReportOptions{},
                flags.partition_mode, flags.strict_polynomial};
    if (flags.partition_mode && !part) {
        throw Error("ValidationError",
                    "--partition-mode needs a 'partition' section");
    }
    if (const Entry* e = root.find("verify")) {
        ctx.opts.verify_r_max = parse_int(*e);
    }
    if (const Entry* e = root.find("table")) {
        ctx.opts.table_limit = parse_int(*e);
    }
    if (flags.verify) ctx.opts.verify_r_max = *flags.verify;
    if (flags.table) ctx.opts.table_limit = *flags.table;

    Json doc;
    doc["schema"] = kReportSchema;
    doc["version"] = kToolVersion;
    doc["input"] = source_name;
    doc["input_digest"] = content_digest(content);
    Json tasks = Json::array();

    std::ostringstream text;
    text << "ddpoly report\n";
    text << "input: " << source_name << "\n";
    text << "digest: " << content_digest(content) << "\n";

    int index = 0;
    for (const auto& child : root.children) {
        if (child.name != "task") continue;
        const Entry* kind = child.entries.empty() ? nullptr : &child.entries[0];
        std::string task_kind;
        const Section* body = &child;
        // both "task chi_extension { ... }" (section per task) and
        // "task { kind chi_extension ... }" would be reasonable; the format
        // uses the former, so the kind arrives as the section's first token
        if (kind && kind->key == "kind") {
            task_kind = kind->value;
        }
        if (task_kind.empty()) {
            throw ParseError("task sections are written 'task <kind> {'",
                             child.line, 1);
        }
        ++index;
        std::string body_text;
        Json j;
        if (task_kind == "chi_extension") {
            j = run_chi_extension(*body, ctx, body_text);
        } else if (task_kind == "chi_intermediate") {
            j = run_chi_intermediate(*body, ctx, body_text);
        } else if (task_kind == "quasi_probe") {
            j = run_quasi_probe(*body, ctx, body_text);
        } else if (task_kind == "chain_audit") {
            j = run_chain_audit(*body, ctx, body_text);
        } else if (task_kind == "theorem5_chain") {
            j = run_theorem5_chain(*body, ctx, body_text);
        } else if (task_kind == "dim_bound") {
            j = run_dim_bound(*body, ctx, body_text);
        } else if (task_kind == "compare_generators") {
            j = run_compare_generators(*body, ctx, body_text);
        } else {
            throw ParseError("unknown task kind '" + task_kind + "'", child.line,
                             1);
        }
        Json entry;
        entry["index"] = index;
        entry["kind"] = task_kind;
        entry.update(j);
        tasks.push_back(entry);
        text << "\n[" << index << "] " << task_kind << "\n" << body_text;
    }
    doc["tasks"] = tasks;

    return RunResult{doc, text.str()};
}

RunResult run_problem_file(const std::string& path, const RunFlags& flags) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("ValidationError", "cannot open problem file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_problem_text(buf.str(), path, flags);
}

}  // namespace ddpoly
