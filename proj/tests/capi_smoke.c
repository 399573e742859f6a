/* Copyright 2026 The tiltcheck Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Compiles the public header as C and drives the shared library.
 */
#include <stdio.h>
#include <string.h>

#include "tilt/tilt.h"

static int failures = 0;

static void expect(int ok, const char* what) {
  if (!ok) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(void) {
  tilt_report* r = NULL;
  tilt_verify_request req = {"kapranov", 2, 4, NULL, 0, NULL, 0, 0};
  expect(tilt_verify(&req, &r) == TILT_OK, "kapranov(2,4) verifies");
  expect(r != NULL && strstr(tilt_report_json(r, 0), "\"k0_rank\":\"6\"") != NULL, "k0_rank 6");
  expect(tilt_report_verdict(r) == TILT_VERDICT_PASS, "pass verdict");
  tilt_report_free(r);

  r = NULL;
  expect(tilt_verify(&(tilt_verify_request){"kapranov", 4, 4, NULL, 0, NULL, 0, 0}, &r) == TILT_INVALID_INPUT,
         "d = n rejected");
  expect(r == NULL && strlen(tilt_last_error()) > 0, "error message set");

  const tilt_algebra conic = {2, 2, NULL, 0};
  expect(tilt_descent_bs(&conic, 0, &r) == TILT_OK, "conic descent");
  expect(strstr(tilt_report_json(r, 0), "\"end_dim\":\"9\"") != NULL, "conic end_dim 9");
  tilt_report_free(r);

  expect(strncmp(tilt_version(), "tiltcheck ", 10) == 0, "version string");
  if (failures == 0) puts("capi_smoke: all checks passed");
  return failures == 0 ? 0 : 1;
}
