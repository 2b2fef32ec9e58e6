#include "narayana/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "narayana/format.hpp"
#include "narayana/triangles.hpp"

namespace narayana {

namespace {

BigInt integer_term(const Rational& v) {
    if (!is_integer(v)) throw NotIntegerSequence("sequence term is not an integer: " + format_value(v));
    return boost::multiprecision::numerator(v);
}

OeisFixture parse_fixture_text(const std::string& id_hint, const std::string& text) {
    OeisFixture f;
    f.id = id_hint;
    bool have_offset = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            // header comment: "# A039598 offset=0"
            std::istringstream hs(line.substr(1));
            std::string word;
            while (hs >> word) {
                if (word.rfind("offset=", 0) == 0) {
                    f.offset = std::stol(word.substr(7));
                    have_offset = true;
                } else if (word.size() > 1 && word[0] == 'A' &&
                           std::isdigit(static_cast<unsigned char>(word[1]))) {
                    f.id = word;
                }
            }
            continue;
        }
        std::istringstream ls(line);
        long n;
        std::string term;
        if (!(ls >> n >> term)) throw ParseError("malformed fixture line: " + line);
        if (!have_offset) {
            f.offset = n;
            have_offset = true;
        }
        if (n != f.offset + static_cast<long>(f.terms.size()))
            throw ParseError("non-contiguous fixture indices at line: " + line);
        f.terms.emplace_back(term);
    }
    if (f.terms.empty()) throw ParseError("fixture contains no terms");
    return f;
}

}  // namespace

OeisFixture load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureMissing("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture_text("", buf.str());
}

OeisFixture load_fixture(const std::string& id, const std::string& dir) {
    return load_fixture_file(dir + "/" + id + ".txt");
}

OeisFixture fetch_fixture(const std::string& id) {
    const char* base = std::getenv("OEIS_BASE_URL");
    if (base == nullptr || *base == '\0')
        throw FetchDisabled("live fetch requires OEIS_BASE_URL and --fetch");
    httplib::Client client{std::string(base)};
    std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = client.Get(path);
    if (!res || res->status != 200)
        throw FixtureMissing("fetch of " + path + " failed");
    return parse_fixture_text(id, res->body);
}

std::string bfile_string(long offset, const std::vector<BigInt>& terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i)
        out += std::to_string(offset + static_cast<long>(i)) + " " + terms[i].str() + "\n";
    return out;
}

SeqCompare compare_prefix(const OeisFixture& fixture, const std::vector<BigInt>& derived) {
    SeqCompare res;
    size_t n = std::min(fixture.terms.size(), derived.size());
    for (size_t i = 0; i < n; ++i)
        if (fixture.terms[i] != derived[i]) {
            res.ok = false;
            res.mismatch_index = static_cast<long>(i);
            break;
        }
    return res;
}

std::vector<BigInt> derived_sequence(const std::string& spec, long count) {
    std::string base = spec;
    Rational t0 = 1;
    if (auto at = spec.find("@t="); at != std::string::npos) {
        base = spec.substr(0, at);
        t0 = parse_rational(spec.substr(at + 3));
    }
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(count));

    auto rows = [&](TriangleTag tag) {
        Triangle tri = make_triangle(tag);
        for (long n = 0; static_cast<long>(out.size()) < count; ++n)
            for (long k = 0; k <= n && static_cast<long>(out.size()) < count; ++k)
                out.push_back(integer_term(tri.entry(n, k).eval(t0)));
    };
    auto col0 = [&](TriangleTag tag, bool numerator_only) {
        Triangle tri = make_triangle(tag);
        for (long n = 0; static_cast<long>(out.size()) < count; ++n) {
            Rational v = tri.entry(n, 0).eval(t0);
            out.push_back(numerator_only ? boost::multiprecision::numerator(v) : integer_term(v));
        }
    };

    if (base == "narayana") {
        for (long n = 0; n < count; ++n) out.push_back(integer_term(narayana(n).eval(t0)));
    } else if (base == "narayana-b" || base == "M") {
        for (long n = 0; n < count; ++n) out.push_back(integer_term(narayana_b(n).eval(t0)));
    } else if (base == "A-rows") {
        rows(TriangleTag::A);
    } else if (base == "B-rows") {
        rows(TriangleTag::B);
    } else if (base == "D-rows") {
        rows(TriangleTag::D);
    } else if (base == "lucas1-rows") {
        rows(TriangleTag::Lucas1);
    } else if (base == "ballot-rows") {
        rows(TriangleTag::Ballot);
    } else if (base == "B-col0") {
        col0(TriangleTag::B, false);
    } else if (base == "E-col0") {
        col0(TriangleTag::E, false);
    } else if (base == "E-col0-numerator") {
        col0(TriangleTag::E, true);
    } else if (base == "div3-indices") {
        for (long n = 1; static_cast<long>(out.size()) < count; ++n)
            if (narayana_b(n).eval_int(2) % 3 == 0) out.push_back(n);
    } else {
        throw UnknownFamily("unknown sequence spec: " + spec);
    }
    return out;
}

std::string default_spec_for(const std::string& fixture_id) {
    if (fixture_id == "A039598") return "B-rows@t=1";
    if (fixture_id == "A110440") return "B-rows@t=2";
    if (fixture_id == "A039599") return "A-rows@t=1";
    if (fixture_id == "A172094") return "A-rows@t=2";
    if (fixture_id == "A094527") return "D-rows@t=1";
    if (fixture_id == "A118384") return "D-rows@t=2";
    if (fixture_id == "A108044") return "lucas1-rows";
    if (fixture_id == "A001003") return "narayana@t=2";
    if (fixture_id == "A081606") return "div3-indices";
    throw FixtureMissing("no derived spec registered for " + fixture_id);
}

}  // namespace narayana
