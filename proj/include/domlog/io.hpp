/*
 *  Copyright (c) 2026 The domlog authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domlog/asp.hpp"
#include "domlog/fca.hpp"
#include "domlog/program.hpp"

namespace domlog::io {

/// Maps an element name from a text file to a domain element; nullopt means
/// unknown (the parser reports the location).
using NameResolver = std::function<std::optional<ElementId>(std::string_view)>;

/// Resolves names against a domain; "_bot_" always means the least element.
/// Captures the domain by reference.
inline NameResolver domain_resolver(const Domain& d) {
    return [&d](std::string_view name) -> std::optional<ElementId> {
        if (name == "_bot_")
            return d.bottom();
        return d.find(name);
    };
}

/// Resolves names against a context-derived domain: object and attribute
/// names go through the concept labelling, merged display names and "_bot_"
/// resolve directly.  Captures both arguments by reference.
inline NameResolver derived_resolver(const fca::FormalContext& ctx, const fca::DerivedDomain& dd) {
    return [&ctx, &dd](std::string_view name) -> std::optional<ElementId> {
        if (name == "_bot_")
            return dd.domain.bottom();
        for (std::size_t g = 0; g < ctx.objects.size(); ++g)
            if (ctx.objects[g] == name)
                return dd.object_element[g];
        for (std::size_t m = 0; m < ctx.attributes.size(); ++m)
            if (ctx.attributes[m] == name)
                return dd.attribute_element[m];
        return dd.domain.find(name);
    };
}

namespace detail {

struct Scanner {
    std::string_view s;
    std::size_t i = 0;
    std::size_t line = 1, col = 1;

    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    void skip_blank(char comment) {
        for (;;) {
            while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n'))
                advance();
            if (!eof() && peek() == comment) {
                while (!eof() && peek() != '\n')
                    advance();
                continue;
            }
            return;
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col); }
};

inline bool name_char(char c) {
    switch (c) {
    case ' ':
    case '\t':
    case '\r':
    case '\n':
    case ',':
    case '{':
    case '}':
    case '#':
    case '~':
        return false;
    default:
        return true;
    }
}

/// `{ name, name, ... }` with '#' comments allowed inside.
inline Clause clause_from_scanner(Scanner& sc, const NameResolver& resolve) {
    sc.skip_blank('#');
    if (sc.eof() || sc.peek() != '{')
        sc.fail("expected '{'");
    sc.advance();
    ElementSet members;
    sc.skip_blank('#');
    if (!sc.eof() && sc.peek() == '}') {
        sc.advance();
        return Clause{};
    }
    for (;;) {
        sc.skip_blank('#');
        const std::size_t at_line = sc.line, at_col = sc.col;
        std::string name;
        while (!sc.eof() && name_char(sc.peek())) {
            name += sc.peek();
            sc.advance();
        }
        if (name.empty())
            throw ParseError("expected an element name", at_line, at_col);
        std::optional<ElementId> e = resolve(name);
        if (!e)
            throw ParseError("unknown element '" + name + "'", at_line, at_col);
        members.push_back(*e);
        sc.skip_blank('#');
        if (sc.eof())
            sc.fail("unterminated clause");
        if (sc.peek() == ',') {
            sc.advance();
            continue;
        }
        if (sc.peek() == '}') {
            sc.advance();
            return Clause(std::move(members));
        }
        sc.fail("expected ',' or '}'");
    }
}

} // namespace detail

/// A single clause, e.g. "{a, b}" or "{}".
inline Clause parse_clause(const std::string& text, const NameResolver& resolve) {
    detail::Scanner sc{text};
    Clause x = detail::clause_from_scanner(sc, resolve);
    sc.skip_blank('#');
    if (!sc.eof())
        sc.fail("unexpected input after the clause");
    return x;
}

/// A theory file: clauses separated by whitespace, '#' comments.
inline Theory parse_theory(const std::string& text, const NameResolver& resolve) {
    detail::Scanner sc{text};
    Theory t;
    for (;;) {
        sc.skip_blank('#');
        if (sc.eof())
            return t;
        t.push_back(detail::clause_from_scanner(sc, resolve));
    }
}

/// A program file: rules of the form
///
///     {head} <- {pos}.
///     {head} <- {pos}, ~{neg}.
///
/// '#' comments, free-form whitespace.
inline Program parse_program(const std::string& text, const NameResolver& resolve) {
    detail::Scanner sc{text};
    Program p;
    for (;;) {
        sc.skip_blank('#');
        if (sc.eof())
            return p;
        ExtendedRule r;
        r.head = detail::clause_from_scanner(sc, resolve);
        sc.skip_blank('#');
        if (sc.eof() || sc.peek() != '<')
            sc.fail("expected '<-'");
        sc.advance();
        if (sc.eof() || sc.peek() != '-')
            sc.fail("expected '<-'");
        sc.advance();
        r.pos_body = detail::clause_from_scanner(sc, resolve);
        sc.skip_blank('#');
        if (!sc.eof() && sc.peek() == ',') {
            sc.advance();
            sc.skip_blank('#');
            if (sc.eof() || sc.peek() != '~')
                sc.fail("expected '~'");
            sc.advance();
            r.neg_body = detail::clause_from_scanner(sc, resolve);
            sc.skip_blank('#');
        }
        if (sc.eof() || sc.peek() != '.')
            sc.fail("expected '.' at the end of the rule");
        sc.advance();
        p.rules.push_back(std::move(r));
    }
}

inline std::string clause_to_string(const Domain& d, const Clause& x) {
    std::string out = "{";
    for (std::size_t i = 0; i < x.members.size(); ++i)
        out += (i ? ", " : "") + d.name(x.members[i]);
    return out + "}";
}

namespace detail {

inline std::string trim(std::string_view sv) {
    std::size_t b = 0, e = sv.size();
    while (b < e && (sv[b] == ' ' || sv[b] == '\t' || sv[b] == '\r'))
        ++b;
    while (e > b && (sv[e - 1] == ' ' || sv[e - 1] == '\t' || sv[e - 1] == '\r'))
        --e;
    return std::string(sv.substr(b, e - b));
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == '\n') {
            lines.emplace_back(text.substr(start, i - start));
            start = i + 1;
        }
    return lines;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > b)
            out.push_back(s.substr(b, i - b));
    }
    return out;
}

} // namespace detail

/// A poset file:
///
///     # comment
///     elements: a b t
///     le: a t
///     le: b t
///     bottom: root
///
/// `le: x y` declares x below y; the reflexive-transitive closure is taken.
/// The optional `bottom:` line either names a declared element (validated to
/// be the least) or introduces a fresh least element.  Without it the
/// declared order must already have a least element.  The name "_bot_" is
/// reserved for the `bottom:` line.
inline Domain parse_poset(const std::string& text) {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::optional<std::string> bottom_name;

    const std::vector<std::string> lines = detail::split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string line = lines[ln];
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'elements:', 'le:' or 'bottom:'", ln + 1, 1);
        const std::string key = detail::trim(line.substr(0, colon));
        const std::vector<std::string> toks = detail::split_ws(line.substr(colon + 1));
        if (key == "elements") {
            for (const std::string& t : toks) {
                if (t == "_bot_")
                    throw ParseError("the name '_bot_' is reserved for the bottom: line", ln + 1, 1);
                elements.push_back(t);
            }
        } else if (key == "le") {
            if (toks.size() != 2)
                throw ParseError("le: takes exactly two element names", ln + 1, 1);
            if (toks[0] == "_bot_" || toks[1] == "_bot_")
                throw ParseError("the name '_bot_' is reserved for the bottom: line", ln + 1, 1);
            pairs.emplace_back(toks[0], toks[1]);
        } else if (key == "bottom") {
            if (toks.size() != 1)
                throw ParseError("bottom: takes exactly one element name", ln + 1, 1);
            if (bottom_name)
                throw ParseError("bottom: given twice", ln + 1, 1);
            bottom_name = toks[0];
        } else {
            throw ParseError("unknown directive '" + key + "'", ln + 1, 1);
        }
    }

    if (bottom_name) {
        bool declared = false;
        for (const std::string& e : elements)
            declared = declared || e == *bottom_name;
        if (!declared) {
            // Fresh least element below everything already declared.
            for (const std::string& e : elements)
                pairs.emplace_back(*bottom_name, e);
            elements.push_back(*bottom_name);
            return Domain::build(std::move(elements), pairs, false);
        }
        Domain d = Domain::build(std::move(elements), pairs, true);
        if (d.name(d.bottom()) != *bottom_name)
            throw Error("declared bottom '" + *bottom_name + "' is not the least element");
        return d;
    }
    return Domain::build(std::move(elements), pairs, false);
}

/// Renders a domain in the poset file format, listing the covering pairs.
/// Names containing whitespace or syntax characters cannot be expressed.
inline std::string emit_poset(const Domain& d) {
    auto check_name = [](const std::string& n) {
        for (char c : n)
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ':' || c == '#' ||
                c == '{' || c == '}' || c == ',')
                throw Error("element name '" + n + "' cannot be written in the poset format");
    };
    // A bottom with an ordinary name is listed like any other element so the
    // element order survives a round trip; the reserved name "_bot_" may not
    // appear in elements:, so such a bottom is reintroduced fresh on
    // re-parse, which appends it at the end — where builders put it too.
    const bool reserved_bottom = d.name(d.bottom()) == "_bot_";
    std::string out = "elements:";
    for (std::size_t e = 0; e < d.size(); ++e) {
        if (reserved_bottom && static_cast<ElementId>(e) == d.bottom())
            continue;
        check_name(d.name(static_cast<ElementId>(e)));
        out += " " + d.name(static_cast<ElementId>(e));
    }
    out += "\n";
    if (!reserved_bottom)
        check_name(d.name(d.bottom()));
    out += "bottom: " + d.name(d.bottom()) + "\n";
    for (const auto& [x, y] : d.cover_pairs())
        if (!(reserved_bottom && x == d.bottom()))
            out += "le: " + d.name(x) + " " + d.name(y) + "\n";
    return out;
}

/// Classical program text:
///
///     p, -q :- r, not s.     % disjunctive head, default negation
///     p.                     % fact
///     :- p, -p.              % constraint
///
/// Variables are collected in order of first occurrence.
inline asp::ClassicalProgram parse_classical(const std::string& text) {
    detail::Scanner sc{text};
    asp::ClassicalProgram p;

    auto var_index = [&](const std::string& name) -> std::uint32_t {
        for (std::size_t i = 0; i < p.vars.size(); ++i)
            if (p.vars[i] == name)
                return static_cast<std::uint32_t>(i);
        p.vars.push_back(name);
        return static_cast<std::uint32_t>(p.vars.size() - 1);
    };

    auto ident = [&]() -> std::string {
        std::string out;
        if (sc.eof() || !(std::isalpha(static_cast<unsigned char>(sc.peek())) || sc.peek() == '_'))
            sc.fail("expected a variable name");
        while (!sc.eof() &&
               (std::isalnum(static_cast<unsigned char>(sc.peek())) || sc.peek() == '_')) {
            out += sc.peek();
            sc.advance();
        }
        return out;
    };

    auto literal = [&]() -> asp::Literal {
        bool neg = false;
        if (!sc.eof() && sc.peek() == '-') {
            neg = true;
            sc.advance();
            sc.skip_blank('%');
        }
        const std::size_t at_line = sc.line, at_col = sc.col;
        const std::string name = ident();
        if (name == "not")
            throw ParseError("'not' is a reserved word", at_line, at_col);
        return asp::Literal{var_index(name), neg};
    };

    for (;;) {
        sc.skip_blank('%');
        if (sc.eof())
            return p;
        asp::ClassicalRule r;
        bool have_body_marker = false;

        // Head: empty when the rule starts with ":-".
        if (sc.peek() == ':') {
            sc.advance();
            if (sc.eof() || sc.peek() != '-')
                sc.fail("expected ':-'");
            sc.advance();
            have_body_marker = true;
        } else {
            for (;;) {
                r.head.push_back(literal());
                sc.skip_blank('%');
                if (!sc.eof() && sc.peek() == ',') {
                    sc.advance();
                    sc.skip_blank('%');
                    continue;
                }
                break;
            }
            if (sc.eof())
                sc.fail("expected ':-' or '.'");
            if (sc.peek() == ':') {
                sc.advance();
                if (sc.eof() || sc.peek() != '-')
                    sc.fail("expected ':-'");
                sc.advance();
                have_body_marker = true;
            }
        }

        if (have_body_marker) {
            sc.skip_blank('%');
            if (!sc.eof() && sc.peek() != '.') {
                for (;;) {
                    sc.skip_blank('%');
                    // "not" prefix switches the literal to the negative body.
                    std::size_t save_i = sc.i, save_line = sc.line, save_col = sc.col;
                    bool is_not = false;
                    if (std::isalpha(static_cast<unsigned char>(sc.peek()))) {
                        std::string word = ident();
                        if (word == "not") {
                            is_not = true;
                            sc.skip_blank('%');
                        } else {
                            sc.i = save_i;
                            sc.line = save_line;
                            sc.col = save_col;
                        }
                    }
                    (is_not ? r.neg : r.pos).push_back(literal());
                    sc.skip_blank('%');
                    if (!sc.eof() && sc.peek() == ',') {
                        sc.advance();
                        continue;
                    }
                    break;
                }
            }
        }
        sc.skip_blank('%');
        if (sc.eof() || sc.peek() != '.')
            sc.fail("expected '.' at the end of the rule");
        sc.advance();
        p.rules.push_back(std::move(r));
    }
}

inline std::string emit_classical(const asp::ClassicalProgram& p) {
    std::string out;
    for (const asp::ClassicalRule& r : p.rules) {
        std::string line;
        for (std::size_t i = 0; i < r.head.size(); ++i)
            line += (i ? ", " : "") + asp::literal_name(p.vars, r.head[i]);
        if (!r.pos.empty() || !r.neg.empty() || r.head.empty()) {
            line += line.empty() ? ":-" : " :-";
            bool first = true;
            for (asp::Literal l : r.pos) {
                line += (first ? " " : ", ") + asp::literal_name(p.vars, l);
                first = false;
            }
            for (asp::Literal l : r.neg) {
                line += (first ? " not " : ", not ") + asp::literal_name(p.vars, l);
                first = false;
            }
        }
        out += line + ".\n";
    }
    return out;
}

/// Burmeister context format:
///
///     B
///
///     2
///     2
///
///     o1
///     o2
///     a1
///     a2
///     X.
///     .X
///
/// Blank lines between sections are tolerated anywhere; rows use 'X'/'x' for
/// incident and '.' for not.
inline fca::FormalContext parse_cxt(const std::string& text) {
    const std::vector<std::string> lines = detail::split_lines(text);
    std::size_t ln = 0;

    auto next_nonblank = [&](const char* what) -> std::pair<std::string, std::size_t> {
        while (ln < lines.size()) {
            std::string t = detail::trim(lines[ln]);
            ++ln;
            if (!t.empty())
                return {t, ln};
        }
        throw ParseError(std::string("unexpected end of file, expected ") + what,
                         lines.size() + 1, 1);
    };

    auto [header, hline] = next_nonblank("the format tag 'B'");
    if (header != "B")
        throw ParseError("expected the format tag 'B'", hline, 1);

    auto read_count = [&](const char* what) -> std::size_t {
        auto [tok, tline] = next_nonblank(what);
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(std::string("expected ") + what, tline, 1);
        return static_cast<std::size_t>(std::stoul(tok));
    };
    const std::size_t ng = read_count("the object count");
    const std::size_t nm = read_count("the attribute count");

    std::vector<std::string> objects, attributes;
    for (std::size_t g = 0; g < ng; ++g)
        objects.push_back(next_nonblank("an object name").first);
    for (std::size_t m = 0; m < nm; ++m)
        attributes.push_back(next_nonblank("an attribute name").first);

    std::vector<std::uint8_t> incidence(ng * nm, 0);
    // With no attributes every incidence row is empty, so there is nothing
    // to read: blank lines (if any) are skipped like any other blank line.
    for (std::size_t g = 0; nm > 0 && g < ng; ++g) {
        auto [row, rline] = next_nonblank("an incidence row");
        if (row.size() != nm)
            throw ParseError("incidence row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(nm),
                             rline, 1);
        for (std::size_t m = 0; m < nm; ++m) {
            if (row[m] == 'X' || row[m] == 'x')
                incidence[g * nm + m] = 1;
            else if (row[m] != '.')
                throw ParseError("incidence entries must be 'X' or '.'", rline, m + 1);
        }
    }
    while (ln < lines.size()) {
        if (!detail::trim(lines[ln]).empty())
            throw ParseError("unexpected input after the incidence rows", ln + 1, 1);
        ++ln;
    }
    return fca::FormalContext::build(std::move(objects), std::move(attributes),
                                     std::move(incidence));
}

inline std::string emit_cxt(const fca::FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count()) + "\n";
    out += std::to_string(ctx.attribute_count()) + "\n\n";
    for (const std::string& g : ctx.objects)
        out += g + "\n";
    for (const std::string& m : ctx.attributes)
        out += m + "\n";
    if (ctx.attribute_count() > 0) {
        for (std::size_t g = 0; g < ctx.object_count(); ++g) {
            for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
                out += ctx.incident(g, m) ? 'X' : '.';
            out += "\n";
        }
    }
    return out;
}

/// CSV variant of a context: header row `,a1,a2,...`, then one row per
/// object `obj,1,0,...`.  Cell values 1/x/X mean incident, 0/empty mean not.
/// No quoting; cells are trimmed.
inline fca::FormalContext parse_context_csv(const std::string& text) {
    const std::vector<std::string> lines = detail::split_lines(text);

    auto split_cells = [](const std::string& line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == ',') {
                cells.push_back(detail::trim(line.substr(start, i - start)));
                start = i + 1;
            }
        return cells;
    };

    std::size_t ln = 0;
    while (ln < lines.size() && detail::trim(lines[ln]).empty())
        ++ln;
    if (ln == lines.size())
        throw ParseError("empty file, expected a header row", 1, 1);
    std::vector<std::string> header = split_cells(lines[ln]);
    if (header.empty() || !header[0].empty())
        throw ParseError("the header row must start with an empty cell", ln + 1, 1);
    std::vector<std::string> attributes(header.begin() + 1, header.end());
    ++ln;

    std::vector<std::string> objects;
    std::vector<std::uint8_t> incidence;
    for (; ln < lines.size(); ++ln) {
        if (detail::trim(lines[ln]).empty())
            continue;
        std::vector<std::string> cells = split_cells(lines[ln]);
        if (cells.size() != attributes.size() + 1)
            throw ParseError("row has " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(attributes.size() + 1),
                             ln + 1, 1);
        if (cells[0].empty())
            throw ParseError("empty object name", ln + 1, 1);
        objects.push_back(cells[0]);
        for (std::size_t m = 0; m < attributes.size(); ++m) {
            const std::string& v = cells[m + 1];
            if (v == "1" || v == "x" || v == "X")
                incidence.push_back(1);
            else if (v == "0" || v.empty())
                incidence.push_back(0);
            else
                throw ParseError("cell values must be 1, 0, x or empty", ln + 1, m + 2);
        }
    }
    return fca::FormalContext::build(std::move(objects), std::move(attributes),
                                     std::move(incidence));
}

} // namespace domlog::io
