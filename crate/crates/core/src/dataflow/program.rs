use super::matrix::WeightMatrix;
use super::template::TemplateKind;
use super::DataflowError;

/// Templates plus the matrix wiring template outputs (columns) into
/// template input slots (rows). Input slots are numbered template by
/// template in order.
#[derive(Debug, Clone, PartialEq)]
pub struct DataflowProgram {
    templates: Vec<TemplateKind>,
    weights: WeightMatrix,
    image_size: usize,
    slot_offsets: Vec<usize>,
}

fn offsets(templates: &[TemplateKind]) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(templates.len());
    let mut total = 0;
    for t in templates {
        offs.push(total);
        total += t.arity();
    }
    (offs, total)
}

impl DataflowProgram {
    pub fn new(templates: Vec<TemplateKind>, weights: WeightMatrix, image_size: usize) -> Result<Self, DataflowError> {
        let (slot_offsets, slots) = offsets(&templates);
        if weights.shape() != (slots, templates.len()) {
            return Err(DataflowError::ShapeMismatch(format!(
                "weight matrix is {:?}, program needs {slots}x{}",
                weights.shape(),
                templates.len()
            )));
        }
        for t in &templates {
            if let TemplateKind::Reflect(r) = t {
                r.validate(image_size)?;
            }
        }
        Ok(DataflowProgram { templates, weights, image_size, slot_offsets })
    }

    /// Program with every weight zero.
    pub fn unwired(templates: Vec<TemplateKind>, image_size: usize) -> Result<Self, DataflowError> {
        let (_, slots) = offsets(&templates);
        let n = templates.len();
        Self::new(templates, WeightMatrix::zeros(slots, n), image_size)
    }

    pub fn templates(&self) -> &[TemplateKind] {
        &self.templates
    }

    pub fn weights(&self) -> &WeightMatrix {
        &self.weights
    }

    pub fn image_size(&self) -> usize {
        self.image_size
    }

    pub fn slot_count(&self) -> usize {
        self.weights.shape().0
    }

    /// Rows of the weight matrix feeding template `k`.
    pub fn slots_of(&self, k: usize) -> std::ops::Range<usize> {
        let start = self.slot_offsets[k];
        start..start + self.templates[k].arity()
    }

    /// Same templates, different wiring.
    pub fn with_weights(&self, weights: WeightMatrix) -> Result<Self, DataflowError> {
        if weights.shape() != self.weights.shape() {
            return Err(DataflowError::ShapeMismatch(format!(
                "weight matrix is {:?}, program needs {:?}",
                weights.shape(),
                self.weights.shape()
            )));
        }
        Ok(DataflowProgram { weights, ..self.clone() })
    }

    /// Sets the weight from template `from`'s output into input slot `slot` of template `to`.
    pub fn connect(&mut self, from: usize, to: usize, slot: usize, w: f64) {
        let row = self.slots_of(to).nth(slot).expect("input slot exists");
        self.weights.set(row, from, w);
    }
}

/// Appends a template wired in with zero weights, so nothing already in
/// the program changes until those weights are ramped up.
pub fn graft_template(prog: &DataflowProgram, template: TemplateKind) -> Result<DataflowProgram, DataflowError> {
    let weights = prog.weights.padded(template.arity(), 1);
    let mut templates = prog.templates.clone();
    templates.push(template);
    DataflowProgram::new(templates, weights, prog.image_size)
}
