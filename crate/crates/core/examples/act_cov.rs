//! Actions and covers: Γ turns an action into its action groupoid, Φ
//! reads an action off a cover, and the two are inverse up to isomorphism.

use opgroupoid::groupoid::{action_to_covering, coset_cover, covering_to_action, FinGroupoid, GpdAction};
use opgroupoid::internal::check_act_cov_equivalence_plain;

fn main() -> opgroupoid::Result<()> {
    let g = FinGroupoid::one_object(4, 0, |a, b| (a + b) % 4)?;
    let cc = coset_cover(&g, 0, &[0, 2])?;

    let p = action_to_covering(&cc.action)?;
    println!("Γ(cosets of {{0,2}}): {} objects, {} arrows", p.source.n_objects(), p.source.n_arrows());
    let back = covering_to_action(&p)?;
    println!("Φ(Γ(act)) = act: {}", back == cc.action);

    let actions = vec![GpdAction::canonical(&g), cc.action.clone()];
    let covers = vec![cc.projection.clone(), p];
    let r = check_act_cov_equivalence_plain(&g, &actions, &covers);
    println!("equivalence on {} actions and {} covers: {r}", actions.len(), covers.len());
    Ok(())
}
