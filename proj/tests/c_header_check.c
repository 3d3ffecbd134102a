/*
 * Copyright 2026 The lglab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* The public header must compile as C. */

#include <stdio.h>

#include "lglab/lglab.h"

int main(void) {
  lglab_model* m = NULL;
  lglab_model_info info;
  if (lglab_model_from_spec("h3", &m) != LGLAB_OK) return 1;
  if (lglab_model_get_info(m, &info) != LGLAB_OK) return 1;
  lglab_model_free(m);
  printf("lglab %s kind %d\n", lglab_version(), info.kind);
  return info.kind == 4 ? 0 : 1;
}
