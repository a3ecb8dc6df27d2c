// Copyright 2026 The hkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to the hkb engine. Knowledge bases travel as opaque handles,
// results as JSON strings (schema "hkb/v1"), failures as status codes with
// a per-thread message behind hkb_last_error().

#ifndef HKB_HKB_H_
#define HKB_HKB_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hkb_kb hkb_kb;

enum {
  HKB_OK = 0,           /* success */
  HKB_NO_SOLUTION = 1,  /* request admits no transaction / revision */
  HKB_INPUT_ERROR = 2,  /* parse error, unknown predicate, bad option */
  HKB_BOUND_ERROR = 3,  /* a configured search bound was exceeded */
  HKB_INTERNAL_ERROR = 4
};

/* Parse a program from text or from a file. On HKB_OK *out owns the handle;
 * release it with hkb_free. */
int hkb_parse(const char* text, hkb_kb** out);
int hkb_parse_file(const char* path, hkb_kb** out);
void hkb_free(hkb_kb* kb);

/* Canonical textual form of the program. Free with hkb_string_free. */
int hkb_serialize(const hkb_kb* kb, char** out);

/* Least model and constraint report:
 * {"schema","kind":"model","mode","atoms":[...],"satisfies_constraints",
 *  "violations":[{"constraint","witness"}]} */
int hkb_model(const hkb_kb* kb, char** out_json);

/* Revision by a ground fact "p(a)." or denial ":- p(a), q(b).".
 * options_json (all keys optional): {"strategy":str,"all_solutions":bool,
 * "trace":bool,"depth_limit":int}.
 * {"schema","kind":"revision","request","vacuous","outcomes":[
 *   {"inserted":[...],"deleted":[...],"facts_after":[...],"kb_after":str,
 *    "trace":[...]}]} */
int hkb_revise(const hkb_kb* kb, const char* alpha, const char* options_json,
               char** out_json);

/* View update on a database program. request is a ground atom text; insert
 * nonzero asks for insertion, zero for deletion.
 * options_json: {"algo":"sld"|"tableau"|"materialized","ic_order":
 * "first"|"last","all_solutions":bool,"depth_limit":int,"node_cap":int}.
 * {"schema","kind":"view-update","request","direction","algo",
 *  "transactions":[{"insert":[...],"delete":[...],"provenance",
 *                   "non_ground":bool,"facts_after":[...]}]} */
int hkb_view_update(const hkb_kb* kb, const char* request, int insert,
                    const char* options_json, char** out_json);

/* Locally minimal explanations for making a ground atom derivable (insert
 * nonzero) or underivable (zero).
 * options_json: {"ic_order":"first"|"last","depth_limit":int}.
 * {"schema","kind":"explanations","goal","direction","members":
 *   [{"insert":[...],"delete":[...]}],"filtered":[...],"depth_cut":bool} */
int hkb_explain(const hkb_kb* kb, const char* request, int insert,
                const char* options_json, char** out_json);

/* Rationality report for the transition before -> after under the request
 * alpha (ground fact or denial).
 * {"schema","kind":"postulates","all_pass","results":[
 *   {"name","label","pass","bounded","witness"}]} */
int hkb_check(const hkb_kb* before, const hkb_kb* after, const char* alpha,
              char** out_json);

/* Randomized model-revision law sweep.
 * options_json: {"seed":int,"instances":int,"max_abducibles":int}.
 * {"schema","kind":"lab","seed","instances","checks","ok",
 *  "violations":[...]} */
int hkb_lab(const char* options_json, char** out_json);

void hkb_string_free(char* s);

/* Message for the most recent failing call on this thread, or "". */
const char* hkb_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* HKB_HKB_H_ */
