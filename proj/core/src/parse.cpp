#include "thompson/parse.hpp"

#include <cctype>

namespace thompson {

namespace {

std::string strip_ws(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

Tree parse_tree_at(const std::string& text, std::size_t begin, std::size_t end) {
    if (begin >= end) throw parse_error("empty tree component", begin);
    long ones = 0, zeros = 0;
    for (std::size_t i = begin; i < end; ++i) {
        char c = text[i];
        if (c != '0' && c != '1')
            throw parse_error(std::string("unexpected character '") + c + "' in tree", i);
        c == '1' ? ++ones : ++zeros;
        if (zeros > ones && i + 1 != end)
            throw parse_error("Dyck violation in tree shape", i);
    }
    if (zeros != ones + 1) throw parse_error("Dyck violation in tree shape", end - 1);
    return Tree(text.substr(begin, end - begin));
}

}  // namespace

ParsedElement parse_element_raw(const std::string& text) {
    std::string s = strip_ws(text);
    std::size_t slash1 = s.find('/');
    if (slash1 == std::string::npos) throw parse_error("expected 't/s' form", s.size());
    Tree t = parse_tree_at(s, 0, slash1);

    std::size_t rest = slash1 + 1;
    if (rest >= s.size()) throw parse_error("missing source tree", s.size());

    if (s[rest] == 'r') {
        std::size_t i = rest + 1;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("expected rotation amount after 'r'", i);
        int k = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            k = k * 10 + (s[i] - '0');
            ++i;
        }
        if (i >= s.size() || s[i] != '/')
            throw parse_error("expected '/' after rotation", i);
        Tree src = parse_tree_at(s, i + 1, s.size());
        if (src.leaf_count() != t.leaf_count())
            throw parse_error("leaf-count mismatch between trees", i + 1);
        return {t, rotation_perm(t.leaf_count(), k), src, Flavor::T};
    }

    if (s[rest] == '[') {
        std::size_t close = s.find(']', rest);
        if (close == std::string::npos) throw parse_error("unterminated permutation list", s.size());
        Perm perm;
        std::size_t i = rest + 1;
        while (i < close) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("expected leaf index", i);
            int v = 0;
            while (i < close && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                ++i;
            }
            perm.push_back(v);
            if (i < close) {
                if (s[i] != ',') throw parse_error("expected ',' in permutation list", i);
                ++i;
            }
        }
        if (close + 1 >= s.size() || s[close + 1] != '/')
            throw parse_error("expected '/' after permutation", close + 1);
        Tree src = parse_tree_at(s, close + 2, s.size());
        if (src.leaf_count() != t.leaf_count())
            throw parse_error("leaf-count mismatch between trees", close + 2);
        if (static_cast<int>(perm.size()) != t.leaf_count())
            throw parse_error("permutation length does not match leaf count", rest);
        return {t, perm, src, Flavor::V};
    }

    Tree src = parse_tree_at(s, rest, s.size());
    if (src.leaf_count() != t.leaf_count())
        throw parse_error("leaf-count mismatch between trees", rest);
    return {t, identity_perm(t.leaf_count()), src, Flavor::F};
}

GroupElement parse_element(const std::string& text) {
    ParsedElement p = parse_element_raw(text);
    try {
        return GroupElement(p.t, p.perm, p.s, p.flavor);
    } catch (const domain_error& e) {
        throw parse_error(e.what(), 0);
    }
}

std::string print_element(const GroupElement& g) {
    switch (g.flavor()) {
        case Flavor::F:
            return g.top().shape() + "/" + g.bottom().shape();
        case Flavor::T: {
            int k = rotation_amount(g.perm()).value();
            return g.top().shape() + "/r" + std::to_string(k) + "/" + g.bottom().shape();
        }
        default: {
            std::string p = "[";
            for (std::size_t i = 0; i < g.perm().size(); ++i) {
                if (i) p += ",";
                p += std::to_string(g.perm()[i]);
            }
            p += "]";
            return g.top().shape() + "/" + p + "/" + g.bottom().shape();
        }
    }
}

}  // namespace thompson
