/** Builds the spec document the service expects, including the null
 * method implied by the plot kind, from the setup form's fields. */

export interface SpecForm {
  kind: string;
  response: string;
  group?: string;
  predictor?: string;
  degree?: number;
  g?: number;
  m?: number;
  seed?: number;
  rorschach?: boolean;
}

const NEEDS_GROUP = new Set(["boxplot"]);
const NEEDS_PREDICTOR = new Set(["scatter_residual", "binned_residual", "empirical_logit"]);

export function formProblem(form: SpecForm): string | null {
  if (!form.response) return "Response column is required.";
  if (NEEDS_GROUP.has(form.kind) && !form.group) return "Group column is required.";
  if (NEEDS_PREDICTOR.has(form.kind) && !form.predictor) return "Predictor column is required.";
  if (!NEEDS_GROUP.has(form.kind) && !NEEDS_PREDICTOR.has(form.kind) && form.kind !== "qq") {
    return `Unknown plot kind ${form.kind}.`;
  }
  return null;
}

export function buildSpec(form: SpecForm): object {
  const degree = form.degree ?? 1;
  let nullMethod: object;
  switch (form.kind) {
    case "boxplot":
      nullMethod = { kind: "permute_groups", response: form.response, group: form.group };
      break;
    case "scatter_residual":
      nullMethod = {
        kind: "parametric_bootstrap_lm",
        response: form.response,
        predictor: form.predictor,
      };
      break;
    case "binned_residual":
    case "empirical_logit":
      nullMethod = {
        kind: "simulate_logistic",
        response: form.response,
        predictor: form.predictor,
        degree,
      };
      break;
    default:
      nullMethod = { kind: "simulate_normal", column: form.response };
  }
  return {
    plot_kind: form.kind,
    m: form.m ?? 20,
    seed: form.seed ?? 0,
    rorschach: form.rorschach ?? false,
    claim: null,
    model_params: {
      response: form.response,
      predictor: form.predictor ?? null,
      group: form.group ?? null,
      degree,
      g: form.g ?? 5,
      n_bins: null,
      axis: "fitted",
    },
    null_method: nullMethod,
  };
}
