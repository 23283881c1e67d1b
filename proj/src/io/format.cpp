#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "galt/errors.hpp"
#include "galt/io.hpp"
#include "galt/witness.hpp"

namespace galt {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        Line l{number, {}};
        for (std::string w; in >> w;)
            l.words.push_back(w);
        if (!l.words.empty())
            out.push_back(std::move(l));
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what)
{
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

std::optional<std::size_t> parse_count(const std::string& w)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size())
        return std::nullopt;
    return v;
}

std::size_t index_in(const Algebra& a, const std::string& w, const std::string& source, std::size_t line)
{
    // Numerals are indices even when a basis vector is named "1".
    if (auto n = parse_count(w)) {
        if (*n >= a.dim())
            fail(source, line, "basis index '" + w + "' out of range for dimension " + std::to_string(a.dim()));
        return *n;
    }
    std::size_t i = a.index_of(w);
    if (i >= a.dim())
        fail(source, line, "unknown basis name '" + w + "'");
    return i;
}

using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

// Shared by the standalone format and inline action blocks.
Algebra algebra_from_lines(const std::vector<Line>& lines, std::size_t begin, std::size_t end,
                           const std::string& source)
{
    std::optional<Field> field;
    std::optional<std::size_t> dim;
    std::optional<std::vector<std::string>> names;
    std::vector<const Line*> muls;
    for (std::size_t n = begin; n < end; ++n) {
        const Line& l = lines[n];
        const std::string& head = l.words[0];
        if (head == "galt-algebra") {
            if (n != begin || l.words.size() != 2 || l.words[1] != "1")
                fail(source, l.number, "expected header 'galt-algebra 1' on the first line");
        } else if (head == "field") {
            if (l.words.size() != 2 || field)
                fail(source, l.number, "expected a single 'field F' line");
            field = Field::parse(l.words[1]);
        } else if (head == "dim") {
            if (l.words.size() != 2 || dim)
                fail(source, l.number, "expected a single 'dim N' line");
            dim = parse_count(l.words[1]);
            if (!dim)
                fail(source, l.number, "malformed dimension '" + l.words[1] + "'");
        } else if (head == "basis") {
            if (names)
                fail(source, l.number, "duplicate basis line");
            names.emplace(l.words.begin() + 1, l.words.end());
        } else if (head == "mul") {
            if (l.words.size() != 5)
                fail(source, l.number, "expected 'mul i j k coefficient'");
            muls.push_back(&l);
        } else {
            fail(source, l.number, "unknown keyword '" + head + "'");
        }
    }
    if (!field)
        throw ParseError(source + ": missing 'field' line");
    if (!dim && !names)
        throw ParseError(source + ": missing 'dim' line");
    if (names && dim && names->size() != *dim)
        throw ParseError(source + ": basis has " + std::to_string(names->size()) + " names but dim is " +
                         std::to_string(*dim));
    if (names) {
        for (std::size_t i = 0; i < names->size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if ((*names)[i] == (*names)[j])
                    throw ParseError(source + ": duplicate basis name '" + (*names)[i] + "'");
        }
    }
    Algebra a = names ? Algebra(*field, *names) : Algebra(*field, *dim);
    std::map<Key, std::size_t> seen;
    for (const Line* l : muls) {
        std::size_t i = index_in(a, l->words[1], source, l->number);
        std::size_t j = index_in(a, l->words[2], source, l->number);
        std::size_t k = index_in(a, l->words[3], source, l->number);
        if (auto [it, fresh] = seen.emplace(Key{i, j, k}, l->number); !fresh)
            fail(source, l->number, "entry repeats line " + std::to_string(it->second));
        try {
            a.set_constant(i, j, k, field->parse_scalar(l->words[4]));
        } catch (const ParseError& e) {
            fail(source, l->number, e.what());
        }
    }
    return a;
}

void write_body(std::ostringstream& out, const Algebra& a)
{
    out << "field " << a.field().name() << "\n";
    out << "dim " << a.dim() << "\n";
    out << "basis";
    for (const auto& name : a.basis_names())
        out << ' ' << name;
    out << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (const Scalar& c = a.constant(i, j, k); !c.is_zero())
                    out << "mul " << i << ' ' << j << ' ' << k << ' ' << c << "\n";
}

Algebra resolve_reference(const std::string& ref, const std::filesystem::path& base_dir)
{
    if (ref.starts_with("builtin:"))
        return canonical(ref.substr(8));
    std::filesystem::path p(ref);
    if (p.is_relative())
        p = base_dir / p;
    return parse_algebra(read_file(p), p.string());
}

}  // namespace

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Algebra parse_algebra(std::string_view text, const std::string& source)
{
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].words[0] != "galt-algebra")
        throw ParseError(source + ": expected header 'galt-algebra 1'");
    return algebra_from_lines(lines, 0, lines.size(), source);
}

std::string write_algebra(const Algebra& a)
{
    std::ostringstream out;
    out << "galt-algebra 1\n";
    write_body(out, a);
    return out.str();
}

ActionData parse_action(std::string_view text, const std::filesystem::path& base_dir, const std::string& source)
{
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "galt-action" ||
        lines[0].words[1] != "1")
        throw ParseError(source + ": expected header 'galt-action 1'");

    std::optional<Algebra> b, a;
    struct Entry {
        const Line* line;
        bool left;
    };
    std::vector<Entry> entries;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const Line& l = lines[n];
        const std::string& head = l.words[0];
        if (head == "B" || head == "A") {
            if (l.words.size() != 2)
                fail(source, l.number, "expected '" + head + " REFERENCE'");
            auto& slot = head == "B" ? b : a;
            if (slot)
                fail(source, l.number, "algebra " + head + " given twice");
            std::string ref = l.words[1];
            if (ref.starts_with("@"))
                ref.erase(0, 1);
            slot = resolve_reference(ref, base_dir);
        } else if (head == "begin") {
            if (l.words.size() != 2 || (l.words[1] != "A" && l.words[1] != "B"))
                fail(source, l.number, "expected 'begin A' or 'begin B'");
            auto& slot = l.words[1] == "B" ? b : a;
            if (slot)
                fail(source, l.number, "algebra " + l.words[1] + " given twice");
            std::size_t close = n + 1;
            while (close < lines.size() &&
                   !(lines[close].words.size() == 2 && lines[close].words[0] == "end" &&
                     lines[close].words[1] == l.words[1]))
                ++close;
            if (close == lines.size())
                fail(source, l.number, "missing 'end " + l.words[1] + "'");
            slot = algebra_from_lines(lines, n + 1, close, source);
            n = close;
        } else if (head == "left" || head == "right") {
            if (l.words.size() != 5)
                fail(source, l.number, "expected '" + head + " i j k coefficient'");
            entries.push_back({&l, head == "left"});
        } else {
            fail(source, l.number, "unknown keyword '" + head + "'");
        }
    }
    if (!b || !a)
        throw ParseError(source + ": both B and A must be given");
    if (!(b->field() == a->field()))
        throw ParseError(source + ": B is over " + b->field().name() + " but A is over " + a->field().name());

    ActionData act = zero_action(*b, *a);
    std::map<std::tuple<bool, std::size_t, std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& e : entries) {
        const auto& w = e.line->words;
        // left b a k c, right a b k c
        std::size_t bi = index_in(*b, e.left ? w[1] : w[2], source, e.line->number);
        std::size_t ai = index_in(*a, e.left ? w[2] : w[1], source, e.line->number);
        std::size_t k = index_in(*a, w[3], source, e.line->number);
        if (auto [it, fresh] = seen.emplace(std::tuple{e.left, bi, ai, k}, e.line->number); !fresh)
            fail(source, e.line->number, "entry repeats line " + std::to_string(it->second));
        Scalar c = a->field().zero();
        try {
            c = a->field().parse_scalar(w[4]);
        } catch (const ParseError& ex) {
            fail(source, e.line->number, ex.what());
        }
        (e.left ? act.left : act.right)[bi](k, ai) = c;
    }
    return act;
}

std::string write_action(const ActionData& act)
{
    std::ostringstream out;
    out << "galt-action 1\nbegin B\n";
    write_body(out, act.acting);
    out << "end B\nbegin A\n";
    write_body(out, act.target);
    out << "end A\n";
    const std::size_t n = act.target.dim();
    for (std::size_t b = 0; b < act.acting.dim(); ++b)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k) {
                if (const Scalar& c = act.left[b](k, a); !c.is_zero())
                    out << "left " << b << ' ' << a << ' ' << k << ' ' << c << "\n";
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < act.acting.dim(); ++b)
            for (std::size_t k = 0; k < n; ++k) {
                if (const Scalar& c = act.right[b](k, a); !c.is_zero())
                    out << "right " << a << ' ' << b << ' ' << k << ' ' << c << "\n";
            }
    return out.str();
}

Algebra load_algebra(const std::string& spec)
{
    if (spec.starts_with("builtin:"))
        return canonical(spec.substr(8));
    return parse_algebra(read_file(spec), spec);
}

ActionData load_action(const std::string& spec, const Algebra& target)
{
    if (spec == "builtin:regular")
        return regular_action(target);
    if (spec == "builtin:scalar")
        return scalar_action(target);
    std::filesystem::path p(spec);
    ActionData act = parse_action(read_file(p), p.parent_path().empty() ? "." : p.parent_path(), spec);
    if (!(act.target == target))
        throw ParseError(spec + ": the action's A differs from the algebra given on the command line");
    return act;
}

}  // namespace galt
