// game_server.hpp
// HTTP+JSON front end for the twenty-questions game.
//
//   POST /sessions                 -> {id}
//   GET  /sessions/{id}            -> {asked, finished, answer_label?, transcript}
//   GET  /sessions/{id}/question   -> {no_labels_sample, yes_labels_sample, p_no, p_yes, pending_bits}
//   POST /sessions/{id}/answer     {bit: 0|1} -> session view
//   GET  /alphabet                 -> {size, entropy_bits, expected_questions}
//
// Errors are {error: code, message} with 400 (bad request body / bit),
// 404 (unknown or expired session), 409 (session finished) or 422 (no such
// branch).
#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

#include "entropia/game.hpp"

namespace httplib {
class Server;
}

namespace entropia::game {

struct ServerOptions {
    std::string cors_origin = "*";
    std::optional<std::string> ui_dir;  // static bundle served at "/"
    std::size_t label_sample = 8;
};

nlohmann::json session_view(const GameSession& s);
nlohmann::json question_view(const QuestionView& q);
nlohmann::json alphabet_view(const Deck& deck);

/// Registers all routes on `server`. `store` and `deck` must outlive the
/// server; `options` is copied.
void install_routes(httplib::Server& server, SessionStore& store, const Deck& deck, const ServerOptions& options = {});

/// Blocking: serves until the process is stopped. Returns false if the port cannot be bound.
bool serve(const Deck& deck, const std::string& host, int port, const ServerOptions& options = {});

}  // namespace entropia::game
