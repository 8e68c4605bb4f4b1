#include "entropia/game_server.hpp"

#include <httplib.h>

#include "entropia/error.hpp"

namespace entropia::game {

namespace {

void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message) {
    send_json(res, status, {{"error", code}, {"message", message}});
}

void not_found(httplib::Response& res, const std::string& id) {
    send_error(res, 404, "session_not_found", "no active session '" + id + "'");
}

}  // namespace

nlohmann::json session_view(const GameSession& s) {
    nlohmann::json j{{"asked", s.asked}, {"finished", s.finished}, {"transcript", s.transcript}};
    if (s.answer_label) j["answer_label"] = *s.answer_label;
    return j;
}

nlohmann::json question_view(const QuestionView& q) {
    return {{"no_labels_sample", q.no_labels}, {"yes_labels_sample", q.yes_labels}, {"p_no", q.p_no},
            {"p_yes", q.p_yes},                {"pending_bits", q.pending_bits}};
}

nlohmann::json alphabet_view(const Deck& deck) {
    return {{"size", deck.entries().size()},
            {"entropy_bits", deck.entropy_bits()},
            {"expected_questions", deck.expected_questions()}};
}

void install_routes(httplib::Server& server, SessionStore& store, const Deck& deck, const ServerOptions& options) {
    server.set_tcp_nodelay(true);
    server.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});

    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.Post("/sessions", [&store](const httplib::Request&, httplib::Response& res) {
        send_json(res, 201, {{"id", store.create().id}});
    });

    server.Get(R"(/sessions/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        const auto id = req.matches[1].str();
        if (auto s = store.get(id))
            send_json(res, 200, session_view(*s));
        else
            not_found(res, id);
    });

    server.Get(R"(/sessions/([0-9a-f]+)/question)", [&store, sample = options.label_sample](const httplib::Request& req, httplib::Response& res) {
        const auto id = req.matches[1].str();
        try {
            if (auto q = store.question(id, sample))
                send_json(res, 200, question_view(*q));
            else
                not_found(res, id);
        } catch (const StateError& e) {
            send_error(res, 409, "session_finished", e.what());
        }
    });

    server.Post(R"(/sessions/([0-9a-f]+)/answer)", [&store](const httplib::Request& req, httplib::Response& res) {
        const auto id = req.matches[1].str();
        const auto body = nlohmann::json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.is_object() || !body.contains("bit") || !body["bit"].is_number_integer()) {
            send_error(res, 400, "invalid_bit", "body must be {\"bit\": 0|1}");
            return;
        }
        const auto bit = body["bit"].get<long long>();
        if (bit != 0 && bit != 1) {
            send_error(res, 400, "invalid_bit", "bit must be 0 or 1");
            return;
        }
        try {
            if (auto s = store.answer(id, static_cast<int>(bit)))
                send_json(res, 200, session_view(*s));
            else
                not_found(res, id);
        } catch (const StateError& e) {
            send_error(res, 409, "session_finished", e.what());
        } catch (const DomainError& e) {
            send_error(res, 422, "invalid_branch", e.what());
        }
    });

    server.Get("/alphabet", [&deck](const httplib::Request&, httplib::Response& res) {
        send_json(res, 200, alphabet_view(deck));
    });

    if (options.ui_dir) server.set_mount_point("/", *options.ui_dir);
}

bool serve(const Deck& deck, const std::string& host, int port, const ServerOptions& options) {
    httplib::Server server;
    SessionStore store(deck);
    install_routes(server, store, deck, options);
    return server.listen(host, port);
}

}  // namespace entropia::game
