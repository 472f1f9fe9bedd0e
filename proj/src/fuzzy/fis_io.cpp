#include "vanet/fuzzy/fis_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace vanet::fuzzy {

FisParseError::FisParseError(std::string source, std::size_t line, const std::string& message)
    : FisError(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line),
      detail_(message) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    FisDefinition run() {
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const auto nl = text_.find('\n', pos);
            std::string_view line = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++line_no_;
            if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (!line.empty()) statement(line);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        return finish();
    }

private:
    enum class Section { None, System, Input, Output, Rules };

    struct PendingVar {
        LinguisticVariable var;
        std::size_t line;
        bool has_range;
    };

    struct PendingRule {
        std::string name;
        std::vector<std::string> words;
        std::size_t line;
    };

    [[noreturn]] void fail(const std::string& msg) const { throw FisParseError(source_, line_no_, msg); }

    double number(const std::string& tok) const {
        double v = 0.0;
        const auto* end = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(tok.data(), end, v);
        if (ec != std::errc() || ptr != end) fail("expected a number, got '" + tok + "'");
        return v;
    }

    void statement(std::string_view line) {
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            header(split_ws(line.substr(1, line.size() - 2)));
            return;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected 'key = value'");
        const auto lhs = split_ws(line.substr(0, eq));
        const std::string_view rhs = trim(line.substr(eq + 1));
        if (lhs.empty()) fail("missing key");

        switch (section_) {
            case Section::None: fail("statement outside of a section");
            case Section::System: system_key(lhs, rhs); break;
            case Section::Input:
            case Section::Output: variable_key(lhs, rhs); break;
            case Section::Rules: rule_line(lhs, rhs); break;
        }
    }

    void header(const std::vector<std::string>& words) {
        if (words.empty()) fail("empty section header");
        if (words[0] == "system" && words.size() == 1) {
            section_ = Section::System;
        } else if ((words[0] == "input" || words[0] == "output") && words.size() == 2) {
            const bool is_input = words[0] == "input";
            if (!is_input && have_output_) fail("only one output variable is supported");
            section_ = is_input ? Section::Input : Section::Output;
            LinguisticVariable var;
            var.name = words[1];
            var.role = is_input ? VariableRole::Input : VariableRole::Output;
            vars_.push_back({std::move(var), line_no_, false});
            if (!is_input) have_output_ = true;
        } else if (words[0] == "rules" && words.size() == 1) {
            section_ = Section::Rules;
        } else {
            fail("unknown section '" + words[0] + "'");
        }
    }

    void system_key(const std::vector<std::string>& lhs, std::string_view rhs) {
        if (lhs.size() != 1) fail("malformed system key");
        const std::string& key = lhs[0];
        const std::string value(rhs);
        if (key == "name") {
            def_.name = value;
        } else if (key == "type") {
            if (value != "mamdani") fail("only type = mamdani is supported");
        } else if (key == "and") {
            if (value != "min") fail("only and = min is supported");
        } else if (key == "or") {
            if (value != "max") fail("only or = max is supported");
        } else if (key == "defuzzifier") {
            if (value != "centroid") fail("only defuzzifier = centroid is supported");
        } else if (key == "resolution") {
            const double v = number(value);
            if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
                fail("resolution must be a positive integer");
            }
            def_.centroid_resolution = static_cast<std::size_t>(v);
        } else if (key == "normalize_inputs") {
            if (value == "true") def_.normalize_inputs = true;
            else if (value == "false") def_.normalize_inputs = false;
            else fail("normalize_inputs must be true or false");
        } else {
            fail("unknown system key '" + key + "'");
        }
    }

    void variable_key(const std::vector<std::string>& lhs, std::string_view rhs) {
        PendingVar& pv = vars_.back();
        LinguisticVariable& var = pv.var;
        const auto words = split_ws(rhs);
        if (lhs[0] == "unit" && lhs.size() == 1) {
            var.unit = std::string(rhs);
        } else if (lhs[0] == "range" && lhs.size() == 1) {
            if (words.size() != 2) fail("range takes two numbers");
            var.universe = {number(words[0]), number(words[1])};
            pv.has_range = true;
        } else if (lhs[0] == "term" && lhs.size() == 2) {
            if (words.empty()) fail("term needs a shape");
            std::vector<double> p;
            for (std::size_t i = 1; i < words.size(); ++i) p.push_back(number(words[i]));
            try {
                var.terms.push_back({lhs[1], make_shape(words[0], p)});
            } catch (const FisParseError&) {
                throw;
            } catch (const FisError& e) {
                fail(e.what());
            }
        } else {
            fail("unknown variable key");
        }
    }

    MembershipFunction make_shape(const std::string& shape, const std::vector<double>& p) const {
        if (shape == "ramp") {
            if (p.size() != 2) fail("ramp takes 2 thresholds");
            return MembershipFunction::ramp_up(p[0], p[1]);
        }
        if (shape == "triangle") {
            if (p.size() != 3) fail("triangle takes 3 thresholds");
            return MembershipFunction::triangle(p[0], p[1], p[2]);
        }
        if (shape == "trapezoid") {
            if (p.size() != 4) fail("trapezoid takes 4 thresholds");
            return MembershipFunction::trapezoid(p[0], p[1], p[2], p[3]);
        }
        fail("unknown shape '" + shape + "'");
    }

    void rule_line(const std::vector<std::string>& lhs, std::string_view rhs) {
        if (lhs.size() != 2 || lhs[0] != "rule") fail("expected 'rule <name> = if ... then ...'");
        pending_rules_.push_back({lhs[1], split_ws(rhs), line_no_});
    }

    FisDefinition finish() {
        for (auto& pv : vars_) {
            line_no_ = pv.line;
            if (!pv.has_range) fail("variable '" + pv.var.name + "' has no range");
            if (pv.var.role == VariableRole::Input) def_.inputs.push_back(std::move(pv.var));
            else def_.output = std::move(pv.var);
        }
        if (!have_output_) {
            line_no_ = 0;
            fail("no [output] section");
        }
        for (const auto& pr : pending_rules_) {
            line_no_ = pr.line;
            def_.rules.push_back(build_rule(pr));
        }
        line_no_ = 0;
        try {
            def_.validate();
        } catch (const FisParseError&) {
            throw;
        } catch (const FisError& e) {
            fail(e.what());
        }
        return std::move(def_);
    }

    Rule build_rule(const PendingRule& pr);

    std::string_view text_;
    std::string source_;
    std::size_t line_no_ = 0;
    Section section_ = Section::None;
    bool have_output_ = false;
    FisDefinition def_;
    std::vector<PendingVar> vars_;
    std::vector<PendingRule> pending_rules_;
};

// if A is x and B is y ... then F is z
Rule Parser::build_rule(const PendingRule& pr) {
    const auto& w = pr.words;
    Rule rule;
    rule.name = pr.name;
    rule.antecedent.assign(def_.inputs.size(), SIZE_MAX);
    if (w.empty() || w[0] != "if") fail("rule must start with 'if'");
    std::size_t i = 1;
    for (;;) {
        if (i + 2 >= w.size() || w[i + 1] != "is") fail("expected '<variable> is <term>'");
        const std::string& var = w[i];
        const std::string& term = w[i + 2];
        std::size_t v = 0;
        while (v < def_.inputs.size() && def_.inputs[v].name != var) ++v;
        if (v == def_.inputs.size()) fail("unknown input variable '" + var + "'");
        if (rule.antecedent[v] != SIZE_MAX) fail("input '" + var + "' named twice");
        const auto idx = def_.inputs[v].term_index(term);
        if (!idx) fail("unknown term '" + term + "' for '" + var + "'");
        rule.antecedent[v] = *idx;
        i += 3;
        if (i < w.size() && w[i] == "and") {
            ++i;
            continue;
        }
        break;
    }
    if (i + 4 != w.size() || w[i] != "then" || w[i + 2] != "is") fail("expected 'then <output> is <term>'");
    if (w[i + 1] != def_.output.name) fail("consequent must reference output '" + def_.output.name + "'");
    const auto idx = def_.output.term_index(w[i + 3]);
    if (!idx) fail("unknown output term '" + w[i + 3] + "'");
    rule.consequent = *idx;
    for (std::size_t v = 0; v < rule.antecedent.size(); ++v) {
        if (rule.antecedent[v] == SIZE_MAX) fail("antecedent does not mention input '" + def_.inputs[v].name + "'");
    }
    return rule;
}

// Shortest representation that parses back to the same double.
std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_variable(std::ostringstream& out, const LinguisticVariable& var) {
    out << '[' << (var.role == VariableRole::Input ? "input " : "output ") << var.name << "]\n";
    if (!var.unit.empty()) out << "unit = " << var.unit << '\n';
    out << "range = " << fmt_double(var.universe.lo) << ' ' << fmt_double(var.universe.hi) << '\n';
    for (const auto& t : var.terms) {
        out << "term " << t.label << " = " << to_string(t.mf.shape());
        for (std::size_t i = 0; i < t.mf.threshold_count(); ++i) out << ' ' << fmt_double(t.mf.threshold(i));
        out << '\n';
    }
    out << '\n';
}

}  // namespace

FisDefinition parse_fis(std::string_view text, const std::string& source) {
    return Parser(text, source).run();
}

FisDefinition load_fis(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FisError("cannot open FIS file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fis(buf.str(), path.string());
}

std::string format_rule(const FisDefinition& fis, const Rule& rule) {
    std::ostringstream out;
    out << "rule " << rule.name << " = if ";
    for (std::size_t v = 0; v < fis.inputs.size(); ++v) {
        if (v) out << " and ";
        out << fis.inputs[v].name << " is " << fis.inputs[v].terms.at(rule.antecedent.at(v)).label;
    }
    out << " then " << fis.output.name << " is " << fis.output.terms.at(rule.consequent).label;
    return out.str();
}

std::string format_fis(const FisDefinition& fis) {
    std::ostringstream out;
    out << "[system]\n"
        << "name = " << fis.name << '\n'
        << "type = mamdani\nand = min\nor = max\ndefuzzifier = centroid\n"
        << "resolution = " << fis.centroid_resolution << '\n'
        << "normalize_inputs = " << (fis.normalize_inputs ? "true" : "false") << "\n\n";
    for (const auto& in : fis.inputs) write_variable(out, in);
    write_variable(out, fis.output);
    out << "[rules]\n";
    for (const auto& r : fis.rules) out << format_rule(fis, r) << '\n';
    return out.str();
}

}  // namespace vanet::fuzzy
