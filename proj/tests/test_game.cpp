#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "entropia/error.hpp"
#include "entropia/game.hpp"
#include "entropia/rng.hpp"

using namespace entropia;
using namespace entropia::game;

namespace {

Deck flowers() { return Deck({{"rose", 0.5}, {"tulip", 0.25}, {"daisy", 0.125}, {"lily", 0.125}}); }

Deck random_deck(Rng& rng, std::size_t k) {
    std::vector<AlphabetEntry> entries;
    for (std::size_t i = 0; i < k; ++i) entries.push_back({"w" + std::to_string(i), rng.uniform() + 1e-3});
    return Deck(std::move(entries));
}

}  // namespace

TEST_CASE("loading alphabets") {
    const auto d = flowers();
    CHECK(d.expected_questions() == 1.75);
    CHECK(d.entropy_bits() == doctest::Approx(1.75).epsilon(1e-15));

    std::istringstream csv("symbol,weight\nrose,8\ntulip,4\ndaisy,2\nlily,2\n");
    const auto loaded = load_alphabet(csv);
    CHECK(loaded.entries().size() == 4);
    CHECK(loaded.book().code_for("tulip") == "10");

    std::istringstream dup("symbol,weight\na,1\na,2\n");
    CHECK_THROWS_AS(load_alphabet(dup), DomainError);
    std::istringstream zero("symbol,weight\na,1\nb,0\n");
    CHECK_THROWS_AS(load_alphabet(zero), DomainError);
    std::istringstream negative("symbol,weight\na,1\nb,-2\n");
    CHECK_THROWS_AS(load_alphabet(negative), DomainError);
    std::istringstream empty("symbol,weight\n");
    CHECK_THROWS_AS(load_alphabet(empty), DomainError);
    // labels may contain commas; the weight is the last field
    std::istringstream comma("symbol,weight\n\"a,b\",1\nc,1\n");
    CHECK(load_alphabet(comma).entries()[0].label == "\"a,b\"");
}

TEST_CASE("uniform corpus of 2^20 entries needs 20 questions") {
    std::vector<AlphabetEntry> entries;
    entries.reserve(1 << 20);
    for (int i = 0; i < (1 << 20); ++i) entries.push_back({std::to_string(i), 1.0});
    const Deck d(std::move(entries));
    CHECK(d.expected_questions() == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(d.entropy_bits() == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("sessions on the dyadic flowers") {
    const auto d = flowers();
    auto s = start_session(d, "s1");
    CHECK_FALSE(s.finished);
    CHECK(s.asked == 0);

    const auto q = current_question(d, s);
    CHECK(q.p_no == 0.5);
    CHECK(q.p_yes == 0.5);
    CHECK(q.pending_bits == 1.0);
    CHECK(q.no_labels == std::vector<std::string>{"rose"});
    CHECK(q.yes_count == 3);

    const auto rose = answer(d, s, 0);
    CHECK(rose.finished);
    CHECK(rose.answer_label == "rose");
    CHECK_THROWS_AS(current_question(d, rose), StateError);
    CHECK_THROWS_AS(answer(d, rose, 1), StateError);

    auto t = answer(d, s, 1);
    CHECK_FALSE(t.finished);
    t = answer(d, t, 0);
    CHECK(t.finished);
    CHECK(t.answer_label == "tulip");
    CHECK(t.asked == 2);
    CHECK(t.transcript == "10");

    CHECK_THROWS_AS(answer(d, s, 2), DomainError);
    CHECK_THROWS_AS(answer(d, s, -1), DomainError);
}

TEST_CASE("skewed split carries less than a bit") {
    const Deck d({{"a", 0.9}, {"b", 0.1}});
    const auto q = current_question(d, start_session(d, "x"));
    CHECK(q.pending_bits == doctest::Approx(0.4689955935892812).epsilon(1e-14));
}

TEST_CASE("single-entry alphabet still asks one question") {
    const Deck d({{"only", 3.0}});
    auto s = start_session(d, "x");
    CHECK_FALSE(s.finished);
    const auto q = current_question(d, s);
    CHECK(q.p_no == 1.0);
    CHECK(q.pending_bits == 0.0);
    CHECK_THROWS_AS(answer(d, s, 1), DomainError);
    s = answer(d, s, 0);
    CHECK(s.finished);
    CHECK(s.asked == 1);
    CHECK(s.answer_label == "only");
    CHECK(simulate_plays(d, 1000, 1).scalar("mean_questions") == 1.0);
}

TEST_CASE("every leaf transcript equals its codeword, alphabets up to 2^12") {
    Rng rng(12);
    for (std::size_t k : {1u, 2u, 3u, 7u, 64u, 1000u, 4096u}) {
        const auto d = random_deck(rng, k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& code = d.book().code(i);
            auto s = start_session(d, "x");
            for (std::size_t j = 0; j < code.size(); ++j) {
                REQUIRE_FALSE(s.finished);
                REQUIRE(s.asked == j);
                s = answer(d, s, code[j] - '0');
            }
            REQUIRE(s.finished);
            REQUIRE(s.transcript == code);
            REQUIRE(s.answer_label == d.distribution().label(i));
            REQUIRE(replay(d, "x", code).answer_label == s.answer_label);
        }
    }
}

TEST_CASE("exhaustive weighted play equals the expected code length") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = random_deck(rng, static_cast<std::size_t>(rng.between(1, 300)));
        double weighted = 0.0;
        for (std::size_t i = 0; i < d.entries().size(); ++i) {
            const auto s = replay(d, "x", d.book().code(i));
            weighted += d.distribution().prob(i) * s.asked;
        }
        CHECK(weighted == doctest::Approx(d.expected_questions()).epsilon(1e-12));
    }
}

TEST_CASE("replay is a pure function of the transcript") {
    const auto d = flowers();
    const auto a = replay(d, "id", "11");
    const auto b = answer(d, answer(d, start_session(d, "id"), 1), 1);
    CHECK(a.node == b.node);
    CHECK(a.transcript == b.transcript);
    CHECK_FALSE(a.finished);
    CHECK_THROWS_AS(replay(d, "id", "1x"), DomainError);
}

TEST_CASE("simulated plays") {
    const auto f = simulate_plays(flowers(), 100'000, 42);
    CHECK(std::abs(f.scalar("mean_questions") - 1.75) <= 0.01);
    CHECK(f.scalar("expected_questions") == 1.75);
    CHECK(f.check("entropy_bound"));
    CHECK(f.check("rate_consistent"));
    const Deck skew({{"a", 0.4}, {"b", 0.3}, {"c", 0.2}, {"d", 0.1}});
    const auto s = simulate_plays(skew, 100'000, 42);
    CHECK(std::abs(s.scalar("mean_questions") - 1.9) <= 0.01);
    CHECK(s.scalar("expected_questions") == doctest::Approx(1.9));
    CHECK_THROWS_AS(simulate_plays(skew, 0, 1), DomainError);
}

TEST_CASE("session store") {
    const auto d = flowers();
    SessionStore store(d, std::chrono::seconds(60), 1);
    const auto a = store.create();
    const auto b = store.create();
    CHECK(a.id != b.id);
    CHECK(a.id.size() == 32);
    CHECK(store.size() == 2);
    CHECK(store.answer(a.id, 1)->asked == 1);
    CHECK(store.get(a.id)->transcript == "1");
    CHECK(store.get(b.id)->asked == 0);
    CHECK_FALSE(store.get("nope").has_value());
    CHECK_FALSE(store.answer("nope", 0).has_value());
    CHECK(store.answer(a.id, 0)->answer_label == "tulip");
    CHECK_THROWS_AS(store.answer(a.id, 0), StateError);
    CHECK_THROWS_AS(store.question(a.id), StateError);

    store.evict_expired(SessionStore::Clock::now() + std::chrono::seconds(61));
    CHECK(store.size() == 0);
    CHECK_FALSE(store.get(b.id).has_value());
}

TEST_CASE("zero ttl expires sessions on the next lookup") {
    const auto d = flowers();
    SessionStore store(d, std::chrono::seconds(0), 1);
    const auto a = store.create();
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    CHECK_FALSE(store.get(a.id).has_value());

    // creation sweeps idle sessions that were never looked up again
    store.create();
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    store.create();
    CHECK(store.size() == 1);
}

TEST_CASE("concurrent sessions and serialised answers") {
    Rng rng(21);
    const auto d = random_deck(rng, 500);
    SessionStore store(d, std::chrono::minutes(30), 2);
    constexpr int kThreads = 8;
    constexpr int kGames = 200;
    std::vector<std::jthread> workers;
    std::atomic<int> failures{0};
    for (int t = 0; t < kThreads; ++t) {
        workers.emplace_back([&, t] {
            Rng local(static_cast<std::uint64_t>(t));
            for (int g = 0; g < kGames; ++g) {
                const auto target = static_cast<std::size_t>(local.below(500));
                const auto& code = d.book().code(target);
                const auto id = store.create().id;
                std::optional<GameSession> s;
                for (char c : code) s = store.answer(id, c - '0');
                if (!s || !s->finished || s->answer_label != d.distribution().label(target)) ++failures;
            }
        });
    }
    workers.clear();
    CHECK(failures == 0);
    CHECK(store.size() == kThreads * kGames);

    // many threads hammering one session: every accepted answer extends the transcript by one
    const auto shared = store.create().id;
    std::atomic<int> accepted{0};
    std::vector<std::jthread> racers;
    for (int t = 0; t < kThreads; ++t) {
        racers.emplace_back([&] {
            for (int i = 0; i < 50; ++i) {
                try {
                    if (store.answer(shared, 0)) ++accepted;
                } catch (const StateError&) {
                } catch (const DomainError&) {
                }
            }
        });
    }
    racers.clear();
    const auto final_state = store.get(shared);
    CHECK(final_state->asked == static_cast<std::uint32_t>(accepted.load()));
    CHECK(final_state->finished);
}
