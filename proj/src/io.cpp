#include "reesolve/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace rees {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '#') {
                while (pos < s.size() && s[pos] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool ident_ahead() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string ident() {
        skip_ws();
        if (!ident_ahead()) fail("expected identifier");
        std::string out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            out += s[pos];
            advance();
        }
        return out;
    }
    bool digit_ahead() { return std::isdigit(static_cast<unsigned char>(peek())); }
    Int natural() {
        skip_ws();
        if (!digit_ahead()) fail("expected number");
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out += s[pos];
            advance();
        }
        return Int(out);
    }
    Rat rational() {
        bool neg = accept('-');
        Int num = natural();
        Int den(1);
        if (accept('/')) den = natural();
        if (den == 0) fail("zero denominator");
        Rat r(num, den);
        return neg ? Rat(-r) : r;
    }
};

int var_index(Lexer& lx, const std::string& name, const std::vector<std::string>& vars) {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    lx.fail("unknown variable '" + name + "'");
}

// poly := [sign] mono (sign mono)*
// mono := coefficient ('*'? varpow)* | varpow ('*'? varpow)*
Poly parse_poly_impl(Lexer& lx, const std::vector<std::string>& vars) {
    int d = static_cast<int>(vars.size());
    Poly total(d);
    bool first = true;
    while (true) {
        int sign = 1;
        if (lx.accept('+')) {
            sign = 1;
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        Rat coeff(1);
        Monomial m(d);
        bool saw_factor = false;
        if (lx.digit_ahead()) {
            Int num = lx.natural();
            Int den(1);
            if (lx.accept('/')) den = lx.natural();
            if (den == 0) lx.fail("zero denominator");
            coeff = Rat(num, den);
            saw_factor = true;
        }
        while (true) {
            bool star = lx.accept('*');
            if (lx.ident_ahead()) {
                std::string name = lx.ident();
                int v = var_index(lx, name, vars);
                int k = 1;
                if (lx.accept('^')) k = static_cast<int>(lx.natural());
                m.e[v] += k;
                saw_factor = true;
            } else if (star) {
                lx.fail("expected variable after '*'");
            } else {
                break;
            }
        }
        if (!saw_factor) lx.fail("expected term");
        total.add_term(m, sign == 1 ? coeff : Rat(-coeff));
    }
    return total;
}

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Lexer lx(text);
    Poly p = parse_poly_impl(lx, vars);
    if (!lx.eof()) lx.fail("trailing input after polynomial");
    return p;
}

ProblemFile parse_problem(const std::string& text) {
    Lexer lx(text);
    ProblemFile pf;
    std::string kw = lx.ident();
    if (kw != "vars") lx.fail("expected 'vars'");
    while (lx.ident_ahead()) pf.vars.push_back(lx.ident());
    if (pf.vars.empty()) lx.fail("expected at least one variable");
    lx.expect(';');

    kw = lx.ident();
    if (kw == "pair") {
        pf.is_pair = true;
        std::string g = lx.ident();
        if (g != "gens") lx.fail("expected 'gens'");
        lx.expect(':');
        while (true) {
            Poly p = parse_poly_impl(lx, pf.vars);
            if (p.is_zero()) throw ParseError("zero generator", lx.line, lx.col);
            pf.pair_gens.push_back(p);
            if (lx.accept(',')) continue;
            lx.expect(';');
            break;
        }
        std::string bkw = lx.ident();
        if (bkw != "b") lx.fail("expected 'b'");
        lx.expect(':');
        pf.b = static_cast<int>(lx.natural());
        if (pf.b < 1) lx.fail("b must be positive");
        lx.expect(';');
    } else if (kw == "algebra") {
        pf.is_pair = false;
        std::string g = lx.ident();
        if (g != "gens") lx.fail("expected 'gens'");
        lx.expect(':');
        while (true) {
            lx.expect('(');
            Poly p = parse_poly_impl(lx, pf.vars);
            lx.expect(',');
            int n = static_cast<int>(lx.natural());
            if (n < 1) lx.fail("weight must be positive");
            lx.expect(')');
            if (p.is_zero()) throw ParseError("zero generator", lx.line, lx.col);
            pf.algebra_gens.push_back({p, n});
            if (lx.accept(',')) continue;
            lx.expect(';');
            break;
        }
    } else {
        lx.fail("expected 'pair' or 'algebra'");
    }

    while (!lx.eof()) {
        std::string section = lx.ident();
        if (section == "divisors") {
            lx.expect(':');
            while (true) {
                DivisorDecl dd;
                dd.var = lx.ident();
                bool known = false;
                for (const std::string& v : pf.vars) known |= (v == dd.var);
                if (!known) lx.fail("unknown divisor variable '" + dd.var + "'");
                dd.a = Rat(0);
                if (lx.accept('[')) {
                    bool first = true;
                    while (!lx.accept(']')) {
                        if (!first) lx.expect(',');
                        first = false;
                        if (lx.accept(',')) continue;
                        std::string field = lx.ident();
                        if (field == "a") {
                            lx.expect('=');
                            dd.a = lx.rational();
                            if (dd.a < 0) lx.fail("divisor exponent must be >= 0");
                        } else if (field == "D") {
                            dd.inD = true;
                        } else {
                            lx.fail("unknown divisor field '" + field + "'");
                        }
                    }
                }
                pf.divisors.push_back(dd);
                if (lx.accept(',')) continue;
                lx.expect(';');
                break;
            }
        } else if (section == "points") {
            lx.expect(':');
            while (true) {
                lx.expect('(');
                PointQ p;
                p.coords.push_back(lx.rational());
                while (lx.accept(',')) p.coords.push_back(lx.rational());
                lx.expect(')');
                if (p.dim() != static_cast<int>(pf.vars.size()))
                    lx.fail("point dimension mismatch");
                pf.points.push_back(p);
                if (lx.accept(',')) continue;
                lx.expect(';');
                break;
            }
        } else {
            lx.fail("unknown section '" + section + "'");
        }
    }
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

ReesAlgebra ProblemFile::algebra() const {
    int d = static_cast<int>(vars.size());
    if (is_pair) return from_pair({Ideal(d, pair_gens), b});
    return ReesAlgebra(d, algebra_gens);
}

MarkedObject ProblemFile::marked() const {
    MarkedObject M;
    M.G = algebra();
    M.chart = Chart::root(vars);
    for (const DivisorDecl& dd : divisors) {
        DivisorRecord rec;
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == dd.var) rec.var = static_cast<int>(i);
        rec.label = 0;
        rec.a = dd.a;
        rec.inD = dd.inD;
        M.chart.divisors.push_back(rec);
    }
    M.chart.sort_divisors();
    return M;
}

std::string dump_problem(const ProblemFile& pf) {
    std::ostringstream os;
    os << "vars";
    for (const std::string& v : pf.vars) os << " " << v;
    os << ";\n";
    if (pf.is_pair) {
        os << "pair gens: ";
        for (size_t i = 0; i < pf.pair_gens.size(); ++i) {
            if (i) os << ", ";
            os << pf.pair_gens[i].str(pf.vars);
        }
        os << "; b: " << pf.b << ";\n";
    } else {
        os << "algebra gens: ";
        for (size_t i = 0; i < pf.algebra_gens.size(); ++i) {
            if (i) os << ", ";
            os << "(" << pf.algebra_gens[i].f.str(pf.vars) << ", " << pf.algebra_gens[i].n << ")";
        }
        os << ";\n";
    }
    if (!pf.divisors.empty()) {
        os << "divisors: ";
        for (size_t i = 0; i < pf.divisors.size(); ++i) {
            if (i) os << ", ";
            os << pf.divisors[i].var << "[a=" << rat_to_string(pf.divisors[i].a);
            if (pf.divisors[i].inD) os << ", D";
            os << "]";
        }
        os << ";\n";
    }
    if (!pf.points.empty()) {
        os << "points: ";
        for (size_t i = 0; i < pf.points.size(); ++i) {
            if (i) os << ", ";
            os << "(" << rat_list(pf.points[i]) << ")";
        }
        os << ";\n";
    }
    return os.str();
}

std::string rat_list(const PointQ& p) {
    std::ostringstream os;
    for (int i = 0; i < p.dim(); ++i) {
        if (i) os << ",";
        os << rat_to_string(p.coords[i]);
    }
    return os.str();
}

PointQ parse_point(const std::string& text, int dim) {
    Lexer lx(text);
    PointQ p;
    lx.accept('(');
    p.coords.push_back(lx.rational());
    while (lx.accept(',')) p.coords.push_back(lx.rational());
    lx.accept(')');
    if (!lx.eof()) lx.fail("trailing input after point");
    if (p.dim() != dim) lx.fail("point dimension mismatch");
    return p;
}

std::string trace_to_json(const ResolutionTrace& tr) {
    nlohmann::ordered_json j;
    j["steps"] = nlohmann::ordered_json::array();
    for (const TraceStep& s : tr.steps) {
        nlohmann::ordered_json js;
        js["chart"] = s.chart;
        js["center"] = s.center;
        if (s.t) {
            js["t"] = {{"word", rat_to_string(s.t->word)}, {"n", s.t->n}};
        } else {
            js["t"] = nullptr;
        }
        js["kind"] = step_kind_name(s.kind);
        j["steps"].push_back(js);
    }
    j["outcome"] = outcome_name(tr.outcome);
    return j.dump();
}

}  // namespace rees
