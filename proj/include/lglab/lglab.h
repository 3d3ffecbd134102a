// Copyright 2026 The lglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the lglab toolkit.
 *
 * Objects are opaque handles created by lglab_*_new / lglab_*_from_* and
 * released with the matching lglab_*_free. Every fallible call returns an
 * lglab_status; on failure the message is available from lglab_last_error()
 * until the next call on the same thread. Strings returned through char**
 * are owned by the caller and released with lglab_string_free.
 */

#ifndef LGLAB_LGLAB_H_
#define LGLAB_LGLAB_H_

#include <stdint.h>

#if defined(_WIN32)
#define LGLAB_API __declspec(dllexport)
#else
#define LGLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lglab_status {
  LGLAB_OK = 0,
  LGLAB_E_INVALID_ARGUMENT = 1,
  LGLAB_E_DOMAIN = 2,
  LGLAB_E_UNCLASSIFIED = 3,
  LGLAB_E_NOT_TRIANGULARIZABLE = 4,
  LGLAB_E_UNSUPPORTED_GROUP = 5,
  LGLAB_E_SINGULAR_POINT = 6,
  LGLAB_E_DEGENERATE_GEOMETRY = 7,
  LGLAB_E_PARSE = 8,
  LGLAB_E_NON_MANIFOLD = 9,
  LGLAB_E_WRONG_TOPOLOGY = 10,
  LGLAB_E_DEGENERATE_HEIGHT = 11,
  LGLAB_E_RESAMPLE_EXHAUSTED = 12,
  LGLAB_E_IO = 13,
  LGLAB_E_INTERNAL = 99
} lglab_status;

typedef enum lglab_outcome {
  LGLAB_CONSISTENT = 0,      /* every implication checked held */
  LGLAB_ASSERTION_FAILED = 1, /* a checked implication failed */
  LGLAB_INCONCLUSIVE = 2      /* a resampling budget ran out */
} lglab_outcome;

typedef struct lglab_model lglab_model;
typedef struct lglab_mesh lglab_mesh;

typedef struct lglab_model_info {
  int kind;            /* 0 R3, 1 Nil3, 2 Sol3, 3 E2tilde, 4 H3, 5 NonUnimodular */
  int unimodular;      /* 1 when trace(A) = 0 */
  double c;            /* Sol3 / E2tilde parameter */
  double D;            /* det of the working matrix */
  double a, b;         /* canonical parameters when non-unimodular */
  double scale;
  int orientation_flip;
  int admits_open_book;
} lglab_model_info;

typedef struct lglab_verify_config {
  int z_samples;
  int fiber_grid;
  double jacobian_tol;
  uint64_t seed;
} lglab_verify_config;

LGLAB_API const char* lglab_version(void);
LGLAB_API const char* lglab_last_error(void);
LGLAB_API const char* lglab_status_name(lglab_status status);
LGLAB_API void lglab_string_free(char* s);

/* Groups. */
LGLAB_API lglab_status lglab_model_from_matrix(double a, double b, double c, double d, lglab_model** out);
LGLAB_API lglab_status lglab_model_from_Db(double D, double b, lglab_model** out);
LGLAB_API lglab_status lglab_model_from_spec(const char* spec, lglab_model** out);
LGLAB_API void lglab_model_free(lglab_model* model);
LGLAB_API lglab_status lglab_model_get_info(const lglab_model* model, lglab_model_info* out);
/* Label such as "Sol3(1)" or "NonUnimodular(D=0.5,b=1)". */
LGLAB_API lglab_status lglab_model_label(const lglab_model* model, char** out);
LGLAB_API lglab_status lglab_model_to_json(const lglab_model* model, char** out);
LGLAB_API lglab_status lglab_multiply(const lglab_model* model, const double g1[3], const double g2[3], double out[3]);

/* Moduli space of the trace-2 family. */
LGLAB_API double lglab_m_of_D(double D);
LGLAB_API lglab_status lglab_solve_a_from_Db(double D, double b, double* a);
LGLAB_API lglab_status lglab_moduli_csv(double D_min, double D_max, double b_max, int steps, char** out);

/* Meshes. */
LGLAB_API lglab_status lglab_mesh_round(double cx, double cy, double cz, double r, int level, lglab_mesh** out);
LGLAB_API lglab_status lglab_mesh_control(int level, lglab_mesh** out);
LGLAB_API lglab_status lglab_mesh_from_spec(const char* spec, lglab_mesh** out);
LGLAB_API lglab_status lglab_mesh_load(const char* path, lglab_mesh** out);
LGLAB_API lglab_status lglab_mesh_parse(const char* obj_text, lglab_mesh** out);
LGLAB_API lglab_status lglab_mesh_save(const lglab_mesh* mesh, const char* path);
LGLAB_API lglab_status lglab_mesh_to_obj(const lglab_mesh* mesh, char** out);
LGLAB_API lglab_status lglab_mesh_counts(const lglab_mesh* mesh, int* vertices, int* edges, int* faces, int* euler);
LGLAB_API void lglab_mesh_free(lglab_mesh* mesh);

/* Verification. */
LGLAB_API void lglab_verify_config_default(lglab_verify_config* config);
LGLAB_API lglab_status lglab_verify(const lglab_model* model, const lglab_mesh* mesh, const lglab_verify_config* config,
                                    char** report_json, lglab_outcome* outcome);

#ifdef __cplusplus
}
#endif

#endif /* LGLAB_LGLAB_H_ */
