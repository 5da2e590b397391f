#include "fitlat/parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fitlat/errors.hpp"

namespace fitlat {

namespace {

enum class Tok : std::uint8_t {
    LowerIdent,
    UpperIdent,
    Number,
    Arrow,     // <-
    Equals,
    Dot,
    Comma,
    LParen,
    RParen,
    Tilde,
    Amp,
    Pipe,
    GullOp,    // (+)
    ConsOp,    // (*)
    LAngle,
    RAngle,
    LBracket,
    RBracket,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident(text_[pos_])) advance();
            std::string word(text_.substr(start, pos_ - start));
            bool upper = std::isupper(static_cast<unsigned char>(word[0]));
            return {upper ? Tok::UpperIdent : Tok::LowerIdent, word, line,
                    col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                advance();
            // A dot joins the number only when a digit follows; otherwise it
            // terminates the statement.
            if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                advance();
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    advance();
            }
            return {Tok::Number, std::string(text_.substr(start, pos_ - start)),
                    line, col};
        }
        advance();
        switch (c) {
            case '=':
                return {Tok::Equals, "=", line, col};
            case '.':
                return {Tok::Dot, ".", line, col};
            case ',':
                return {Tok::Comma, ",", line, col};
            case ')':
                return {Tok::RParen, ")", line, col};
            case '~':
                return {Tok::Tilde, "~", line, col};
            case '&':
                return {Tok::Amp, "&", line, col};
            case '|':
                return {Tok::Pipe, "|", line, col};
            case '>':
                return {Tok::RAngle, ">", line, col};
            case '[':
                return {Tok::LBracket, "[", line, col};
            case ']':
                return {Tok::RBracket, "]", line, col};
            case '(':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ')' &&
                    (text_[pos_] == '+' || text_[pos_] == '*')) {
                    char op = text_[pos_];
                    advance();
                    advance();
                    return {op == '+' ? Tok::GullOp : Tok::ConsOp,
                            op == '+' ? "(+)" : "(*)", line, col};
                }
                return {Tok::LParen, "(", line, col};
            case '<':
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return {Tok::Arrow, "<-", line, col};
                }
                return {Tok::LAngle, "<", line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }

  private:
    bool is_ident(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    Parser(std::string_view text, BilatticePtr bilattice)
        : lexer_(text), bilattice_(std::move(bilattice)) {
        current_ = lexer_.next();
    }

    Program parse_program() {
        Program p;
        p.bilattice = bilattice_;
        std::vector<Clause> rules;
        while (current_.kind != Tok::End) {
            Token start = current_;
            Atom head = parse_atom();
            if (current_.kind == Tok::Equals) {
                consume();
                Value v = parse_value_literal();
                expect(Tok::Dot, "'.'");
                if (!head.is_ground())
                    throw ParseError("fact atom " + head.to_string() +
                                         " must be ground",
                                     start.line, start.column);
                auto it = p.facts.find(head);
                if (it != p.facts.end() && !(it->second == v))
                    throw ParseError("conflicting values for fact " +
                                         head.to_string(),
                                     start.line, start.column);
                p.facts[head] = v;
            } else if (current_.kind == Tok::Arrow) {
                consume();
                FormulaPtr body = parse_formula();
                expect(Tok::Dot, "'.'");
                check_range(head, body, start);
                rules.push_back(Clause{std::move(head), std::move(body)});
            } else {
                throw ParseError("expected '=' or '<-' after atom",
                                 current_.line, current_.column);
            }
        }
        p.rules = merge_rules(std::move(rules));
        collect_constants(p);
        return p;
    }

    struct FactLine {
        Atom atom;
        Value value;
        int line;
        int column;
    };

    std::vector<FactLine> parse_fact_lines() {
        std::vector<FactLine> out;
        while (current_.kind != Tok::End) {
            Token start = current_;
            Atom atom = parse_atom();
            if (!atom.is_ground())
                throw ParseError("hypothesis atom " + atom.to_string() +
                                     " must be ground",
                                 start.line, start.column);
            expect(Tok::Equals, "'='");
            Value v = parse_value_literal();
            expect(Tok::Dot, "'.'");
            out.push_back(
                {std::move(atom), std::move(v), start.line, start.column});
        }
        return out;
    }

  private:
    void consume() { current_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (current_.kind != kind)
            throw ParseError(std::string("expected ") + what, current_.line,
                             current_.column);
        consume();
    }

    bool is_reserved(const std::string& word) const {
        return word == "exists" || word == "forall";
    }

    Atom parse_atom() {
        if (current_.kind != Tok::LowerIdent)
            throw ParseError("expected an atom", current_.line,
                             current_.column);
        if (is_reserved(current_.text))
            throw ParseError("'" + current_.text + "' is a reserved word",
                             current_.line, current_.column);
        Atom atom;
        atom.predicate = current_.text;
        consume();
        if (current_.kind != Tok::LParen) return atom;
        consume();
        while (true) {
            atom.args.push_back(parse_term());
            if (current_.kind == Tok::Comma) {
                consume();
                continue;
            }
            expect(Tok::RParen, "')'");
            break;
        }
        return atom;
    }

    Term parse_term() {
        if (current_.kind == Tok::Number)
            throw ParseError("numbers cannot appear as terms", current_.line,
                             current_.column);
        if (current_.kind != Tok::LowerIdent &&
            current_.kind != Tok::UpperIdent)
            throw ParseError("expected a constant or variable", current_.line,
                             current_.column);
        if (is_reserved(current_.text))
            throw ParseError("'" + current_.text + "' is a reserved word",
                             current_.line, current_.column);
        Token tok = current_;
        consume();
        if (current_.kind == Tok::LParen)
            throw ParseError("function symbols are not supported", tok.line,
                             tok.column);
        return tok.kind == Tok::UpperIdent ? Term::variable(tok.text)
                                           : Term::constant(tok.text);
    }

    Value parse_value_literal() {
        Token start = current_;
        try {
            if (current_.kind == Tok::UpperIdent && current_.text.size() == 1) {
                Value v = bilattice_->parse_value(current_.text);
                consume();
                return v;
            }
            if (current_.kind == Tok::LAngle)
                return parse_pair_literal(Tok::RAngle, "<", ">");
            if (current_.kind == Tok::LBracket)
                return parse_pair_literal(Tok::RBracket, "[", "]");
        } catch (const StructureError& e) {
            throw ParseError(e.what(), start.line, start.column);
        }
        throw ParseError("expected a value literal", start.line, start.column);
    }

    Value parse_pair_literal(Tok closer, const char* open, const char* close) {
        consume();
        std::string text = open;
        text += element_text();
        expect(Tok::Comma, "','");
        text += ",";
        text += element_text();
        expect(closer, close);
        text += close;
        return bilattice_->parse_value(text);
    }

    std::string element_text() {
        if (current_.kind != Tok::Number &&
            !(current_.kind == Tok::LowerIdent &&
              (current_.text == "false" || current_.text == "true")))
            throw ParseError("expected a lattice element", current_.line,
                             current_.column);
        std::string text = current_.text;
        consume();
        return text;
    }

    bool at_quantifier() const {
        return current_.kind == Tok::LowerIdent &&
               (current_.text == "exists" || current_.text == "forall");
    }

    // A quantifier binds weakest: its body extends maximally to the right,
    // so in operand position it swallows the rest of the formula.
    FormulaPtr parse_quantified() {
        Quant q = current_.text == "exists" ? Quant::Exists : Quant::Forall;
        consume();
        if (current_.kind != Tok::UpperIdent)
            throw ParseError("expected a variable after quantifier",
                             current_.line, current_.column);
        std::string var = current_.text;
        consume();
        return Formula::quantified(q, std::move(var), parse_formula());
    }

    FormulaPtr parse_formula() {
        if (at_quantifier()) return parse_quantified();
        return parse_binary(0);
    }

    // Precedence-climbing over (+) < (*) < | < &.
    FormulaPtr parse_binary(int min_prec) {
        FormulaPtr lhs = parse_unary();
        while (true) {
            int prec;
            BinOp op;
            switch (current_.kind) {
                case Tok::GullOp:
                    prec = 1;
                    op = BinOp::Gullibility;
                    break;
                case Tok::ConsOp:
                    prec = 2;
                    op = BinOp::Consensus;
                    break;
                case Tok::Pipe:
                    prec = 3;
                    op = BinOp::Join;
                    break;
                case Tok::Amp:
                    prec = 4;
                    op = BinOp::Meet;
                    break;
                default:
                    return lhs;
            }
            if (prec < min_prec) return lhs;
            consume();
            FormulaPtr rhs = parse_binary(prec + 1);
            lhs = Formula::binary(op, std::move(lhs), std::move(rhs));
        }
    }

    FormulaPtr parse_unary() {
        if (current_.kind == Tok::Tilde) {
            consume();
            return Formula::literal(true, parse_atom());
        }
        if (at_quantifier()) return parse_quantified();
        return parse_primary();
    }

    FormulaPtr parse_primary() {
        switch (current_.kind) {
            case Tok::LParen: {
                consume();
                FormulaPtr f = parse_formula();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::LowerIdent:
                return Formula::literal(false, parse_atom());
            case Tok::UpperIdent:
            case Tok::LAngle:
            case Tok::LBracket:
                return Formula::constant(parse_value_literal());
            default:
                throw ParseError("expected a formula", current_.line,
                                 current_.column);
        }
    }

    // Every free body variable must occur in the head.
    void check_range(const Atom& head, const FormulaPtr& body,
                     const Token& start) {
        std::set<std::string> head_vars;
        for (const Term& t : head.args)
            if (t.is_variable()) head_vars.insert(t.name);
        for (const std::string& v : free_variables(body))
            if (!head_vars.count(v))
                throw ParseError("variable '" + v +
                                     "' in rule body is not bound by the "
                                     "head or a quantifier",
                                 start.line, start.column);
    }

    // -------------------------------------------------------------------
    // Normalization: rules whose heads coincide up to variable renaming
    // collapse into one clause, bodies joined by |.

    static std::string head_pattern(const Atom& head) {
        std::string key = head.predicate + "/";
        std::map<std::string, int> index;
        for (const Term& t : head.args) {
            if (t.is_variable()) {
                auto [it, fresh] =
                    index.emplace(t.name, static_cast<int>(index.size()));
                key += "#" + std::to_string(it->second) + ";";
            } else {
                key += "c" + t.name + ";";
            }
        }
        return key;
    }

    static void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
        if (const auto* lit = std::get_if<Literal>(&f->node)) {
            for (const Term& t : lit->atom.args)
                if (t.is_variable()) out.insert(t.name);
            return;
        }
        if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
            collect_vars(bin->lhs, out);
            collect_vars(bin->rhs, out);
            return;
        }
        if (const auto* q = std::get_if<QuantNode>(&f->node)) {
            out.insert(q->var);
            collect_vars(q->body, out);
        }
    }

    // Capture-avoiding variable-to-variable renaming.
    static FormulaPtr rename(const FormulaPtr& f,
                             const std::map<std::string, std::string>& map) {
        if (map.empty()) return f;
        if (const auto* lit = std::get_if<Literal>(&f->node)) {
            Atom atom = lit->atom;
            bool changed = false;
            for (Term& t : atom.args) {
                if (!t.is_variable()) continue;
                auto it = map.find(t.name);
                if (it == map.end()) continue;
                t = Term::variable(it->second);
                changed = true;
            }
            if (!changed) return f;
            return Formula::literal(lit->negated, std::move(atom));
        }
        if (std::holds_alternative<Value>(f->node)) return f;
        if (const auto* bin = std::get_if<BinaryNode>(&f->node))
            return Formula::binary(bin->op, rename(bin->lhs, map),
                                   rename(bin->rhs, map));
        const auto& q = std::get<QuantNode>(f->node);
        std::map<std::string, std::string> inner = map;
        inner.erase(q.var);
        bool captures = false;
        for (const auto& [from, to] : inner)
            if (to == q.var) captures = true;
        if (!captures)
            return Formula::quantified(q.quant, q.var, rename(q.body, inner));
        std::set<std::string> used;
        collect_vars(q.body, used);
        for (const auto& [from, to] : inner) {
            used.insert(from);
            used.insert(to);
        }
        std::string fresh(q.var);
        int n = 0;
        while (used.count(fresh)) fresh = q.var + std::to_string(++n);
        FormulaPtr body = rename(q.body, {{q.var, fresh}});
        return Formula::quantified(q.quant, fresh, rename(body, inner));
    }

    static std::vector<Clause> merge_rules(std::vector<Clause> rules) {
        std::vector<Clause> merged;
        std::map<std::string, std::size_t> by_pattern;
        for (Clause& c : rules) {
            std::string key = head_pattern(c.head);
            auto it = by_pattern.find(key);
            if (it == by_pattern.end()) {
                by_pattern.emplace(std::move(key), merged.size());
                merged.push_back(std::move(c));
                continue;
            }
            Clause& target = merged[it->second];
            std::map<std::string, std::string> var_map;
            for (std::size_t i = 0; i < c.head.args.size(); ++i)
                if (c.head.args[i].is_variable() &&
                    c.head.args[i].name != target.head.args[i].name)
                    var_map[c.head.args[i].name] = target.head.args[i].name;
            target.body = Formula::binary(BinOp::Join, target.body,
                                          rename(c.body, var_map));
        }
        return merged;
    }

    static void collect_atom_constants(const Atom& a,
                                       std::set<std::string>& out) {
        for (const Term& t : a.args)
            if (!t.is_variable()) out.insert(t.name);
    }

    static void collect_formula_constants(const FormulaPtr& f,
                                          std::set<std::string>& out) {
        if (const auto* lit = std::get_if<Literal>(&f->node)) {
            collect_atom_constants(lit->atom, out);
            return;
        }
        if (const auto* bin = std::get_if<BinaryNode>(&f->node)) {
            collect_formula_constants(bin->lhs, out);
            collect_formula_constants(bin->rhs, out);
            return;
        }
        if (const auto* q = std::get_if<QuantNode>(&f->node))
            collect_formula_constants(q->body, out);
    }

    static void collect_constants(Program& p) {
        for (const auto& [atom, value] : p.facts)
            collect_atom_constants(atom, p.constants);
        for (const Clause& c : p.rules) {
            collect_atom_constants(c.head, p.constants);
            collect_formula_constants(c.body, p.constants);
        }
    }

    Lexer lexer_;
    BilatticePtr bilattice_;
    Token current_;
};

}  // namespace

Program parse_program(std::string_view text, BilatticePtr bilattice) {
    if (!bilattice) throw StructureError("parse_program needs a bilattice");
    Parser parser(text, std::move(bilattice));
    return parser.parse_program();
}

Interpretation parse_hypothesis(std::string_view text, HerbrandBasePtr hb,
                                BilatticePtr bilattice) {
    if (!hb || !bilattice)
        throw StructureError(
            "parse_hypothesis needs a Herbrand base and a bilattice");
    Parser parser(text, bilattice);
    auto lines = parser.parse_fact_lines();
    Interpretation h(std::move(hb), std::move(bilattice));
    for (const auto& entry : lines) {
        if (!h.herbrand_base()->contains(entry.atom))
            throw ParseError("atom " + entry.atom.to_string() +
                                 " is outside the program's Herbrand base",
                             entry.line, entry.column);
        if (h.defines(entry.atom) && !(h.value(entry.atom) == entry.value))
            throw ParseError(
                "conflicting values for atom " + entry.atom.to_string(),
                entry.line, entry.column);
        h.set(entry.atom, entry.value);
    }
    return h;
}

}  // namespace fitlat
