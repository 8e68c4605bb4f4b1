#include <doctest.h>

#include <cmath>
#include <sstream>

#include "entropia/distribution.hpp"
#include "entropia/error.hpp"
#include "entropia/rng.hpp"

using namespace entropia;

namespace {

Distribution random_distribution(Rng& rng, std::size_t k) {
    std::vector<double> w(k);
    for (auto& x : w) x = rng.uniform() + 1e-3;
    return Distribution::from_weights(w);
}

}  // namespace

TEST_CASE("entropy examples") {
    CHECK(entropy(Distribution::from_weights({1, 1, 1, 1})) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(entropy(Distribution({"x"}, {1.0})) == 0.0);
    CHECK(entropy(Distribution({"a", "b"}, {0.9, 0.1})) == doctest::Approx(0.4689955935892812).epsilon(1e-14));
    CHECK(entropy(Distribution({"a", "b", "c", "d"}, {0.4, 0.3, 0.2, 0.1})) ==
          doctest::Approx(1.8464393446710154).epsilon(1e-14));
    CHECK(entropy(Distribution::from_weights({1, 1}), std::exp(1.0)) == doctest::Approx(std::log(2.0)));
    // zero mass contributes nothing
    CHECK(entropy(Distribution({"a", "b", "c"}, {0.5, 0.5, 0.0})) == doctest::Approx(1.0));
    CHECK_THROWS_AS(entropy(Distribution::from_weights({1, 1}), 1.0), DomainError);
}

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(Distribution({"a", "b"}, {0.5, 0.6}), DomainError);
    CHECK_THROWS_AS(Distribution({"a", "b"}, {1.1, -0.1}), DomainError);
    CHECK_THROWS_AS(Distribution({"a", "a"}, {0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(Distribution({"a"}, {0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(Distribution({}, {}), DomainError);
    CHECK_THROWS_AS(Distribution::from_weights({0.0, 0.0}), DomainError);
    CHECK_NOTHROW(Distribution({"a", "b"}, {0.5, 0.5 + 5e-10}));
    const auto d = Distribution::from_weights({"x", "y"}, {3, 1});
    CHECK(d.prob(d.index_of("x")) == 0.75);
    CHECK_THROWS_AS(d.index_of("z"), DomainError);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.1) == doctest::Approx(0.4689955935892812).epsilon(1e-14));
}

TEST_CASE("kl_divergence examples") {
    const auto u = Distribution::from_weights({"a", "b"}, {1, 1});
    CHECK(kl_divergence(u, u) == 0.0);
    CHECK(kl_divergence(Distribution({"a", "b"}, {1.0, 0.0}), u) == doctest::Approx(1.0));
    CHECK(kl_divergence(Distribution({"a", "b"}, {0.75, 0.25}), u) ==
          doctest::Approx(0.18872187554086717).epsilon(1e-14));
    // labels are matched by name, not position
    CHECK(kl_divergence(Distribution({"a", "b"}, {0.75, 0.25}), Distribution({"b", "a"}, {0.25, 0.75})) == 0.0);
    CHECK_THROWS_AS(kl_divergence(u, Distribution({"a", "b"}, {1.0, 0.0})), DomainError);
    CHECK_THROWS_AS(kl_divergence(u, Distribution::from_weights({"a", "c"}, {1, 1})), DomainError);
}

TEST_CASE("kl_divergence is nonnegative and zero only on equality") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        const auto k = static_cast<std::size_t>(rng.between(1, 10));
        const auto p = random_distribution(rng, k);
        const auto q = random_distribution(rng, k);
        CHECK(kl_divergence(p, q) >= 0.0);
        CHECK(kl_divergence(p, p) == 0.0);
        // Gibbs: cross entropy >= entropy
        double cross = 0.0;
        for (std::size_t j = 0; j < k; ++j) cross -= p.prob(j) * std::log2(q.prob(j));
        CHECK(kl_divergence(p, q) == doctest::Approx(cross - entropy(p)).epsilon(1e-9));
    }
}

TEST_CASE("distribution CSV") {
    std::istringstream in("symbol,weight\nrose,4\ntulip,2\ndaisy,1\nlily,1\n");
    const auto d = read_distribution_csv(in);
    CHECK(d.size() == 4);
    CHECK(d.label(1) == "tulip");
    CHECK(d.prob(1) == 0.25);
    CHECK(entropy(d) == doctest::Approx(1.75));

    std::istringstream crlf("label,weight\r\na,1\r\nb,3\r\n");
    CHECK(read_distribution_csv(crlf).prob(1) == 0.75);

    std::istringstream bad_header("name,count\na,1\n");
    CHECK_THROWS_AS(read_distribution_csv(bad_header), DomainError);
    std::istringstream bad_weight("symbol,weight\na,x\n");
    CHECK_THROWS_AS(read_distribution_csv(bad_weight), DomainError);
    std::istringstream negative("symbol,weight\na,-1\nb,2\n");
    CHECK_THROWS_AS(read_distribution_csv(negative), DomainError);
}
