#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fcg/dataset.hpp"
#include "helpers.hpp"

using fcg::Dataset;
using fcg::SynthKind;
using fcg::SynthSpec;
using testutil::TempDir;

TEST_CASE("dataset construction validates its invariants") {
    CHECK_NOTHROW(Dataset({0.0, 1.0}, 1));
    CHECK_THROWS_AS(Dataset({0.0, 1.0}, 0), std::invalid_argument);           // m >= 1
    CHECK_THROWS_AS(Dataset({0.0}, 1), std::invalid_argument);                // n >= 2
    CHECK_THROWS_AS(Dataset({0.0, 1.0, 2.0}, 2), std::invalid_argument);      // ragged
    CHECK_THROWS_AS(Dataset({0.0, std::nan("")}, 1), std::invalid_argument);  // finite
    CHECK_THROWS_AS(Dataset({0.0, std::numeric_limits<double>::infinity()}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(Dataset({0.0, 1.0}, 1, std::vector<int>{0}), std::invalid_argument);
    const Dataset d({1.0, 2.0, 3.0, 4.0}, 2, std::vector<int>{0, 1});
    CHECK(d.size() == 2);
    CHECK(d.dim() == 2);
    CHECK(d.point(1)[0] == 3.0);
    CHECK(d.has_labels());
    CHECK(d.labels() == std::vector<int>{0, 1});
}

TEST_CASE("synth1 splits into two equal clusters") {
    const Dataset d = fcg::generate_synth({SynthKind::synth1, 100, 2, 7});
    CHECK(d.size() == 100);
    CHECK(d.dim() == 2);
    std::size_t zeros = 0;
    for (int l : d.labels()) zeros += l == 0;
    CHECK(zeros == 50);
    CHECK(d.labels().front() == 0);
    CHECK(d.labels().back() == 1);
}

TEST_CASE("synth1 gives the extra point to cluster 0 for odd n") {
    const Dataset d = fcg::generate_synth({SynthKind::synth1, 7, 1, 3});
    std::size_t zeros = 0;
    for (int l : d.labels()) zeros += l == 0;
    CHECK(zeros == 4);
}

TEST_CASE("synth3 sizes follow the (2,1,1) ratio") {
    const Dataset d = fcg::generate_synth({SynthKind::synth3, 100, 2, 7});
    std::size_t counts[3] = {0, 0, 0};
    for (int l : d.labels()) ++counts[l];
    CHECK(counts[0] == 50);
    CHECK(counts[1] == 25);
    CHECK(counts[2] == 25);

    const Dataset odd = fcg::generate_synth({SynthKind::synth3, 11, 2, 7});
    std::size_t c2[3] = {0, 0, 0};
    for (int l : odd.labels()) ++c2[l];
    CHECK(c2[0] == 5);  // floor(11/2)
    CHECK(c2[1] == 3);  // ceil(11/4)
    CHECK(c2[2] == 3);
}

TEST_CASE("generate_synth is deterministic in the seed") {
    const SynthSpec spec{SynthKind::synth1, 4, 1, 99};
    const Dataset a = fcg::generate_synth(spec);
    const Dataset b = fcg::generate_synth(spec);
    CHECK(a.values() == b.values());
    CHECK(a.labels() == b.labels());
    const Dataset c = fcg::generate_synth({SynthKind::synth1, 4, 1, 100});
    CHECK(a.values() != c.values());
}

TEST_CASE("synth cluster statistics match their distributions") {
    const Dataset d = fcg::generate_synth({SynthKind::synth1, 10000, 1, 11});
    double sum0 = 0.0, sum1 = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        (d.labels()[i] == 0 ? sum0 : sum1) += d.point(i)[0];
    CHECK(std::abs(sum0 / 5000.0 - 0.0) < 0.1);
    CHECK(std::abs(sum1 / 5000.0 - 2.0) < 0.1);

    const Dataset d2 = fcg::generate_synth({SynthKind::synth2, 10000, 1, 11});
    double mean1 = 0.0;
    for (std::size_t i = 5000; i < d2.size(); ++i) mean1 += d2.point(i)[0];
    mean1 /= 5000.0;
    double var1 = 0.0;
    for (std::size_t i = 5000; i < d2.size(); ++i) {
        const double diff = d2.point(i)[0] - mean1;
        var1 += diff * diff;
    }
    var1 /= 4999.0;
    CHECK(std::abs(mean1 - 2.0) < 0.15);
    CHECK(std::abs(var1 - 4.0) < 0.4);
}

TEST_CASE("synth spec validation") {
    CHECK_THROWS_AS(fcg::generate_synth({SynthKind::synth1, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fcg::generate_synth({SynthKind::synth1, 10, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fcg::generate_synth({SynthKind::synth3, 10, 3, 0}), std::invalid_argument);
    CHECK(fcg::parse_synth_kind("synth2") == SynthKind::synth2);
    CHECK_THROWS_AS(fcg::parse_synth_kind("synth4"), std::invalid_argument);
}

TEST_CASE("load_csv with an index label column") {
    TempDir dir("csv");
    testutil::spit(dir / "d.csv", "0,1,a\n2,3,a\n4,5,b\n");
    const Dataset d = fcg::load_csv(dir / "d.csv", "2");
    CHECK(d.size() == 3);
    CHECK(d.dim() == 2);
    CHECK(d.labels() == std::vector<int>{0, 0, 1});
    CHECK(d.point(1)[0] == 2.0);
    CHECK(d.point(2)[1] == 5.0);
}

TEST_CASE("load_csv reports the first bad cell in data-row coordinates") {
    TempDir dir("csv");
    testutil::spit(dir / "d.csv", "0,1,a\n2,3,a\n4,5,b\n");
    // Without a label column the first row reads as a header, so row 0 is
    // "2,3,a" and its third cell is not numeric.
    CHECK_THROWS_WITH_AS(fcg::load_csv(dir / "d.csv"),
                         doctest::Contains("row 0, column 2"), std::runtime_error);
}

TEST_CASE("load_csv rejects malformed files") {
    TempDir dir("csv");
    testutil::spit(dir / "ragged.csv", "0,1\n2,3,4\n");
    CHECK_THROWS_WITH_AS(fcg::load_csv(dir / "ragged.csv"), doctest::Contains("ragged"),
                         std::runtime_error);
    testutil::spit(dir / "empty.csv", "");
    CHECK_THROWS_WITH_AS(fcg::load_csv(dir / "empty.csv"), doctest::Contains("empty"),
                         std::runtime_error);
    testutil::spit(dir / "inf.csv", "x,y\n1,inf\n2,3\n");
    CHECK_THROWS_WITH_AS(fcg::load_csv(dir / "inf.csv"), doctest::Contains("non-finite"),
                         std::runtime_error);
    CHECK_THROWS_AS(fcg::load_csv(dir / "missing.csv"), std::runtime_error);
}

TEST_CASE("load_csv header handling") {
    TempDir dir("csv");
    testutil::spit(dir / "named.csv", "x,y,class\n1,2,pos\n3,4,neg\n5,6,pos\n");
    const Dataset d = fcg::load_csv(dir / "named.csv", "class");
    CHECK(d.dim() == 2);
    CHECK(d.labels() == std::vector<int>{0, 1, 0});
    CHECK_THROWS_WITH_AS(fcg::load_csv(dir / "named.csv", "nope"), doctest::Contains("not found"),
                         std::runtime_error);

    // a column literally named "label" is picked up automatically
    testutil::spit(dir / "auto.csv", "f0,label\n1,7\n2,7\n3,9\n");
    const Dataset a = fcg::load_csv(dir / "auto.csv");
    CHECK(a.dim() == 1);
    CHECK(a.labels() == std::vector<int>{7, 7, 9});  // integer labels kept verbatim

    const Dataset ign = fcg::load_csv(dir / "auto.csv", std::nullopt, true);
    CHECK(ign.dim() == 2);
    CHECK_FALSE(ign.has_labels());

    // headerless numeric file
    testutil::spit(dir / "plain.csv", "1,2\n3,4\n");
    const Dataset p = fcg::load_csv(dir / "plain.csv");
    CHECK(p.size() == 2);
    CHECK_FALSE(p.has_labels());
}

TEST_CASE("csv round trip is exact") {
    TempDir dir("csv");
    const Dataset d({0.1, -1e-17, 3.0, 12345.6789, 2.0 / 3.0, 1e300}, 2,
                    std::vector<int>{5, -2, 5});
    fcg::write_csv(d, dir / "rt.csv");
    const Dataset back = fcg::load_csv(dir / "rt.csv");
    CHECK(back.values() == d.values());
    CHECK(back.dim() == d.dim());
    CHECK(back.labels() == d.labels());

    const Dataset unlabelled({1.5, 2.5, 3.5, 4.5}, 2);
    fcg::write_csv(unlabelled, dir / "u.csv");
    const Dataset uback = fcg::load_csv(dir / "u.csv");
    CHECK(uback.values() == unlabelled.values());
    CHECK_FALSE(uback.has_labels());
}
