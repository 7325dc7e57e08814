#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "zpinterp/seqio.hpp"

using namespace zpinterp;
using zpinterp::testing::random_samples;

namespace {

std::string write_to_string(const Sequence& x, const Metadata& meta = {})
{
    std::ostringstream out;
    write_sequence(x, out, meta);
    return out.str();
}

Sequence read_from_string(const std::string& text)
{
    std::istringstream in(text);
    return read_sequence(in);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(WriteSequence, HeaderAndRowsOnlyWithoutMetadata)
{
    EXPECT_EQ(write_to_string(Sequence({cplx(1.0, 0.0), cplx(0.5, -2.0)})), "n,re,im\n0,1,0\n1,0.5,-2\n");
}

TEST(WriteSequence, MetadataOrderIsPreserved)
{
    const Sequence x({1.0}, 0.25);
    EXPECT_EQ(write_to_string(x, {{"method", "fast-fft"}, {"M", "2"}, {"Ts", "9"}}),
              "# Ts=0.25\n# method=fast-fft\n# M=2\nn,re,im\n0,1,0\n");
}

TEST(WriteSequence, SurfacesSinkFailure)
{
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    EXPECT_THROW(write_sequence(Sequence({1.0}), out), std::runtime_error);
}

TEST(ReadSequence, RoundTripIsBitExact)
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Sequence x(random_samples(16, seed), 1.0 / 3.0);
        const auto back = read_from_string(write_to_string(x));
        EXPECT_EQ(back, x);
    }
    const double third = 1.0 / 3.0;
    const double extremes[] = {third, -0.0, 5e-324, std::numeric_limits<double>::max(), 1e-300, 123456789.123456789};
    std::vector<cplx> v;
    for (double d : extremes) {
        v.emplace_back(d, -d);
    }
    const Sequence x(v);
    const auto back = read_from_string(write_to_string(x));
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(back[i], v[i]);
        EXPECT_EQ(std::signbit(back[i].real()), std::signbit(v[i].real()));
    }
}

TEST(ReadSequence, AcceptsFixedSeventeenDigitForm)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", 1.0 / 3.0);
    const auto x = read_from_string(std::string("n,re,im\n0,") + buffer + ",0\n");
    EXPECT_EQ(x[0].real(), 1.0 / 3.0);
    EXPECT_EQ(read_from_string("n,re,im\n0,1.0000000000000000e+00,  -2.5E-1 \n")[0], cplx(1.0, -0.25));
}

TEST(ReadSequence, SamplePeriodFromMetadata)
{
    std::istringstream in("# Ts=0.5\n# generator=tone h=1\n# free text without equals\nn,re,im\n0,1,0\n");
    const auto file = read_sequence_file(in);
    EXPECT_EQ(file.sequence.sample_period(), 0.5);
    EXPECT_EQ(file.find("generator"), "tone h=1");
    EXPECT_FALSE(file.find("missing").has_value());
}

TEST(ReadSequence, CrLfLineEndings)
{
    EXPECT_EQ(read_from_string("n,re,im\r\n0,1,2\r\n").size(), 1u);
}

namespace {

std::size_t failing_line(const std::string& text)
{
    try {
        read_from_string(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(ReadSequence, ErrorsNameTheLine)
{
    EXPECT_EQ(failing_line("n,re,im\n0,1,0\n1,2,0\n2,1.0,xyz\n"), 4u);
    EXPECT_EQ(failing_line("n,re,im\n0,1,0\n2,1,0\n"), 3u);
    EXPECT_EQ(failing_line("n,re,im\n0,1\n"), 2u);
    EXPECT_EQ(failing_line("n,re,im\n0,inf,0\n"), 2u);
    EXPECT_EQ(failing_line("n,re,im\n0,nan,0\n"), 2u);
    EXPECT_EQ(failing_line("# Ts=-1\nn,re,im\n0,1,0\n"), 1u);
    EXPECT_EQ(failing_line("index,real,imag\n"), 1u);
    EXPECT_NE(failing_line("n,re,im\n"), 0u);
    EXPECT_NE(failing_line(""), 0u);

    try {
        read_from_string("n,re,im\n0,1,0\n1,2,0\n2,1.0,xyz\n");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
}

TEST(WriteTable, HeaderRowsAndSentinel)
{
    const std::vector<TableRow> rows{
        {std::int64_t{0}, 1.5, std::string("a")},
        {std::int64_t{1}, -std::numeric_limits<double>::infinity(), std::string("b")},
        {std::int64_t{2}, 0.1, std::string("c")},
    };
    const std::vector<std::string> columns{"i", "db", "tag"};
    std::ostringstream out;
    write_table(rows, columns, out);
    EXPECT_EQ(out.str(), "i,db,tag\n0,1.5,a\n1,,b\n2,0.1,c\n");

    std::ostringstream again;
    write_table(rows, columns, again);
    EXPECT_EQ(again.str(), out.str());
}

TEST(WriteTable, RejectsRaggedRows)
{
    const std::vector<TableRow> rows{{std::int64_t{0}}};
    const std::vector<std::string> columns{"a", "b"};
    std::ostringstream out;
    EXPECT_THROW(write_table(rows, columns, out), std::domain_error);
}

TEST(GoldenFixtures, ToneFixtureParses)
{
    std::ifstream in(ZPINTERP_FIXTURE_DIR "/tone_n4_h1.csv");
    ASSERT_TRUE(in);
    const auto file = read_sequence_file(in);
    ASSERT_EQ(file.sequence.size(), 4u);
    EXPECT_EQ(file.sequence.sample_period(), 1.0);
    EXPECT_EQ(file.find("kind"), "tone");
    EXPECT_EQ(file.sequence[0], cplx(1.0, 0.0));
    EXPECT_NEAR(std::abs(file.sequence[1] - cplx(0.0, 1.0)), 0.0, 1e-15);
}

TEST(GoldenFixtures, UpsampledFixtureMatchesWriterBytes)
{
    const std::string expected = slurp(ZPINTERP_FIXTURE_DIR "/impulse_n2_m2_fft.csv");
    ASSERT_FALSE(expected.empty());
    std::istringstream in(expected);
    const auto file = read_sequence_file(in);
    EXPECT_EQ(write_to_string(file.sequence, {{"N", "4"}, {"M", "2"}, {"method", "fast-fft"}, {"source_N", "2"}}),
              expected);
}
