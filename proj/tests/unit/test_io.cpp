#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "majorana/errors.hpp"
#include "majorana/serialize.hpp"

using namespace majorana;

namespace {

GridSpec grid(int n, int axes) {
    GridSpec g;
    g.n = n;
    g.box_length = 7.25;
    g.axes = axes;
    return g;
}

std::string drop_last_row(const std::string& s) {
    const auto cut = s.find_last_of('\n', s.size() - 2);
    return s.substr(0, cut + 1);
}

}  // namespace

TEST_CASE("field round trip is bit exact") {
    Rng rng(1);
    for (int axes : {1, 3}) {
        const auto f = random_majorana_field(grid(6, axes), axes == 3 ? Domain::position : Domain::momentum, rng);
        std::stringstream ss;
        write_field(ss, f, MassParam{0.37});
        const StoredField back = read_field(ss);
        CHECK(back.mass.m == 0.37);
        CHECK(back.field.grid == f.grid);
        CHECK(back.field.domain == f.domain);
        CHECK(back.field.values == f.values);
    }
}

TEST_CASE("field header and rows are readable") {
    MajoranaSpinorField f(grid(2, 3), Domain::position);
    f.values[5] = MajoranaSpinor{{0.1, -2.5, 0, 1e-300}};
    std::stringstream ss;
    write_field(ss, f, MassParam{1.0});
    std::string header, row;
    std::getline(ss, header);
    CHECK(header.find("\"format\":\"majorana-field/1\"") != std::string::npos);
    for (int i = 0; i <= 5; ++i) std::getline(ss, row);
    CHECK(row == "1 0 1 0.10000000000000001 -2.5 0 1e-300");
}

TEST_CASE("malformed field files are rejected") {
    Rng rng(2);
    const auto f = random_majorana_field(grid(4, 3), Domain::position, rng);
    std::stringstream ss;
    write_field(ss, f, MassParam{1.0});
    const std::string good = ss.str();

    std::istringstream truncated(drop_last_row(good));
    CHECK_THROWS_AS(read_field(truncated), GridMismatch);

    std::istringstream dup(good + good.substr(good.find('\n') + 1, good.find('\n', good.find('\n') + 1) - good.find('\n')));
    CHECK_THROWS(read_field(dup));

    std::istringstream wrong_tag(std::string("{\"format\":\"other\"}\n"));
    CHECK_THROWS(read_field(wrong_tag));

    std::istringstream bad_grid(std::string("{\"format\":\"majorana-field/1\",\"grid\":{\"n\":3,\"box_length\":1,\"axes\":3},"
                                            "\"domain\":\"position\",\"mass\":1}\n"));
    CHECK_THROWS_AS(read_field(bad_grid), DomainError);

    std::istringstream junk(good.substr(0, good.find('\n') + 1) + "0 0 0 1 2 x 4\n");
    CHECK_THROWS(read_field(junk));
}

TEST_CASE("mode field round trip is bit exact") {
    const SphericalQuadSpec q = make_spherical_quad(5.0, 5, 4, 6, 3);
    Rng rng(3);
    MajoranaModeField m(q);
    for (auto& v : m.values)
        for (int c = 0; c < 4; ++c) v[c] = rng.normal();
    std::stringstream ss;
    write_modes(ss, m, MassParam{2.0});
    const StoredModes back = read_modes(ss);
    CHECK(back.mass.m == 2.0);
    CHECK(back.modes.quad == q);
    CHECK(back.modes.values == m.values);

    std::stringstream again;
    write_modes(again, m, MassParam{2.0});
    std::istringstream cut(drop_last_row(again.str()));
    CHECK_THROWS_AS(read_modes(cut), GridMismatch);

    const std::string text = again.str();
    std::istringstream out_of_range(text.substr(0, text.find('\n') + 1) + "0 2 2 1 1 1 1\n");
    CHECK_THROWS(read_modes(out_of_range));
}
