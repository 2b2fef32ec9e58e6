#pragma once

// Vendored OEIS fixtures, b-file emission, and comparison of derived
// sequences against fixture prefixes.  Live fetch is strictly opt-in: tests
// and default CLI runs never touch the network.

#include <ostream>
#include <string>
#include <vector>

#include "narayana/numeric.hpp"

namespace narayana {

struct OeisFixture {
    std::string id;   // e.g. "A039598"
    long offset = 0;  // index of the first term
    std::vector<BigInt> terms;
};

// fixture file format: optional comment lines "# ..." (the first carries
// "id offset=N"), then b-file style lines "n a(n)"
OeisFixture load_fixture_file(const std::string& path);
OeisFixture load_fixture(const std::string& id, const std::string& dir = "data/oeis");

// GET {OEIS_BASE_URL}/{id}/b{digits}.txt and parse as a b-file; throws
// FetchDisabled unless the environment variable is set
OeisFixture fetch_fixture(const std::string& id);

// byte-stable b-file text: "n a(n)" per line, single space, LF endings
std::string bfile_string(long offset, const std::vector<BigInt>& terms);

struct SeqCompare {
    bool ok = true;
    long mismatch_index = -1;  // position within the compared prefix
};

// compares derived terms against the fixture prefix (shorter side wins)
SeqCompare compare_prefix(const OeisFixture& fixture, const std::vector<BigInt>& derived);

// Derived integer sequences by name:
//   narayana@t=R        C_n(R)
//   narayana-b@t=R      M_n(R)   (alias: M@t=R)
//   {A,B,D}-rows@t=R    triangle read by rows
//   lucas1-rows         Lucas triangle read by rows (zeros included)
//   ballot-rows         ballot triangle read by rows
//   B-col0@t=R          B_{n,0}(R)
//   E-col0@t=R          E_{n,0}(R)            (NotIntegerSequence if rational)
//   E-col0-numerator@t=R  numerator of reduced E_{n,0}(R)
//   div3-indices        n >= 1 with 3 | M_n(2)
// R is an exact rational literal like 1, 2 or 1/2.
std::vector<BigInt> derived_sequence(const std::string& spec, long count);

// the vendored fixture id each derived spec is checked against
std::string default_spec_for(const std::string& fixture_id);

}  // namespace narayana
