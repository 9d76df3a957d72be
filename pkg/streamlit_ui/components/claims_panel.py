"""
Claims Panel Component for Streamlit UI
Verdict counts per claim with a status badge and the claim statement
"""
import streamlit as st

from analysis.report_formatter import COLUMNS, ReportFormatter
from streamlit_ui.config import StreamlitConfig


def render_claims_panel(report):
    """Render one row per claim of a loaded campaign report"""
    st.markdown('<div class="panel-header">Verdicts</div>', unsafe_allow_html=True)

    formatter = ReportFormatter()
    claims = report.get("claims", {})
    if not claims:
        st.info("This report checked no claims.")
        return

    col1, col2, col3 = st.columns(3)
    col1.metric("Instances", report.get("instances", 0))
    col2.metric("Refutations", len(report.get("refutations", [])))
    col3.metric("Certificates", len(report.get("certificates", [])))

    rows = []
    for claim_id in formatter.ordered_claims(report):
        counts = claims[claim_id]
        row = {"claim": claim_id}
        row.update({c: counts.get(c, 0) for c in COLUMNS})
        row["status"] = formatter.claim_status(counts)
        rows.append(row)
    st.dataframe(rows, use_container_width=True, hide_index=True)

    for row in rows:
        color = StreamlitConfig.STATUS_COLORS.get(row["status"], StreamlitConfig.COLORS['muted'])
        st.markdown(f"""
            <div class="claim-row" style="border-left: 4px solid {color};">
                <b>{row['claim']}</b> <span style="color: {color};">{row['status']}</span><br>
                <span class="claim-statement">{ReportFormatter.describe_claim(row['claim'])}</span>
            </div>
        """, unsafe_allow_html=True)

    timing = report.get("timing")
    if timing:
        with st.expander("Timing", expanded=False):
            st.code(formatter.format_timing(timing))
