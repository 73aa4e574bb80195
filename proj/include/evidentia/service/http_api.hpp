#pragma once

#include <memory>

#include "evidentia/service/config.hpp"
#include "evidentia/service/session_store.hpp"

namespace httplib {
class Server;
}

namespace evidentia::service {

// Registers the consultation endpoints on `server`:
//
//   POST   /sessions                         201 {id, report}
//   GET    /sessions/{id}                    {id, kb, asserted, report}
//   DELETE /sessions/{id}                    {id, deleted}
//   POST   /sessions/{id}/symptoms           body {"id": rule}; {step, report}
//   DELETE /sessions/{id}/symptoms/{rule}    {id, asserted, report}
//   GET    /sessions/{id}/report             canonical report; ?precision=full for raw doubles
//   GET    /sessions/{id}/trace              {steps}
//   GET    /kb                               hypotheses and symptom list
//
// Errors are {"error": code, "message": text} with 400 (bad body), 404 (unknown
// session, rule or unasserted symptom), 409 (duplicate symptom) or 422 (total
// conflict; session unchanged).
void mount_api(httplib::Server& server, SessionStore& store);

// Loads the KB and store, listens until SIGINT/SIGTERM. Returns a process exit code.
int serve(const ServiceConfig& config);

}  // namespace evidentia::service
