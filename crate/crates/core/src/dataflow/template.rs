use serde::{Deserialize, Serialize};

use super::image::{GeneralizedImage, Reflection};

/// A fixed stream transformer. Programs differ only in how these are wired.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TemplateKind {
    /// Passes its input through; with the latched state this is a one-tick delay.
    Delay,
    Const {
        value: f64,
    },
    Tanh,
    Sin,
    /// Pointwise product of its two inputs.
    Product,
    /// Rotates point indices: `out[i] = in[(i − by) mod len]`.
    Shift {
        by: i64,
    },
    Reflect(Reflection),
    #[serde(rename = "external")]
    ExternalInput {
        name: String,
    },
}

impl TemplateKind {
    pub fn arity(&self) -> usize {
        match self {
            TemplateKind::Const { .. } | TemplateKind::ExternalInput { .. } => 0,
            TemplateKind::Product => 2,
            _ => 1,
        }
    }

    /// Sup-norm Lipschitz constant of the output in the inputs, `None` when unbounded.
    pub fn lipschitz(&self) -> Option<f64> {
        match self {
            TemplateKind::Const { .. } | TemplateKind::ExternalInput { .. } => Some(0.0),
            TemplateKind::Product => None,
            _ => Some(1.0),
        }
    }

    /// Commutes with linear combinations of its inputs.
    pub fn is_linear(&self) -> bool {
        match self {
            TemplateKind::Delay | TemplateKind::Shift { .. } | TemplateKind::Reflect(_) => true,
            TemplateKind::Const { value } => *value == 0.0,
            _ => false,
        }
    }

    /// The general-phase computation. `external` is only read by external inputs.
    pub(crate) fn compute(
        &self,
        inputs: &[GeneralizedImage],
        len: usize,
        external: Option<&GeneralizedImage>,
    ) -> GeneralizedImage {
        match self {
            TemplateKind::Delay => inputs[0].clone(),
            TemplateKind::Const { value } => GeneralizedImage::constant(len, *value),
            TemplateKind::Tanh => inputs[0].map(f64::tanh),
            TemplateKind::Sin => inputs[0].map(f64::sin),
            TemplateKind::Product => inputs[0].product(&inputs[1]),
            TemplateKind::Shift { by } => inputs[0].rotate(*by),
            TemplateKind::Reflect(r) => r.apply_unchecked(&inputs[0]),
            TemplateKind::ExternalInput { .. } => external.expect("external checked before stepping").clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arities() {
        assert_eq!(TemplateKind::Product.arity(), 2);
        assert_eq!(TemplateKind::Const { value: 1.0 }.arity(), 0);
        assert_eq!(TemplateKind::ExternalInput { name: "x".into() }.arity(), 0);
        assert_eq!(TemplateKind::Shift { by: 2 }.arity(), 1);
    }

    #[test]
    fn json_tags() {
        let t: Vec<TemplateKind> = serde_json::from_str(
            r#"[{"kind":"delay"},{"kind":"const","value":1.5},{"kind":"shift","by":-1},
                {"kind":"reflect","pair_sum":2,"mask":[0,1,2]},{"kind":"external","name":"cam"},
                {"kind":"tanh"},{"kind":"sin"},{"kind":"product"}]"#,
        )
        .unwrap();
        assert_eq!(t[1], TemplateKind::Const { value: 1.5 });
        assert_eq!(t[3], TemplateKind::Reflect(Reflection::full(3)));
        assert_eq!(t[4], TemplateKind::ExternalInput { name: "cam".into() });
        let back: Vec<TemplateKind> = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
