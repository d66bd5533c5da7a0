// Bundle entry point, emitted as /assets/ui.js.  Loaded with defer, so
// the document is parsed by the time this runs.  Static exports carry
// no live controls; enhance() then finds nothing to attach to.

import { enhance } from "./dom";

if (typeof document !== "undefined") {
  enhance(document);
}
